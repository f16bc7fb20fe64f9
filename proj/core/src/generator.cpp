// Copyright 2026 The irgraph Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "irgraph/generator.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "irgraph/error.hpp"

namespace irgraph {
namespace {

// Draws built directly on mt19937_64 output, which the standard pins down,
// so a seed yields the same graph with every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : engine_() % n; }
  bool chance(double p) {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p;
  }
  template <class T, std::size_t N>
  const T& pick(const std::array<T, N>& items) {
    return items[below(N)];
  }

 private:
  std::mt19937_64 engine_;
};

constexpr std::array<NodeKind, 13> kOps = {
    NodeKind::kAdd, NodeKind::kSub, NodeKind::kMul, NodeKind::kDiv,
    NodeKind::kMod, NodeKind::kShl, NodeKind::kShr, NodeKind::kShrs,
    NodeKind::kAnd, NodeKind::kOr,  NodeKind::kEor, NodeKind::kCmp,
    NodeKind::kNot,
};

constexpr std::array<Relation, 8> kRelations = {
    Relation::kGreater, Relation::kGreaterEquals, Relation::kLess,
    Relation::kEqual,   Relation::kNotEqual,      Relation::kLessEqual,
    Relation::kTrue,    Relation::kFalse,
};

constexpr std::array<std::int32_t, 8> kEdgeValues = {
    std::numeric_limits<std::int32_t>::min(),
    std::numeric_limits<std::int32_t>::max(),
    -1, 0, 1, 31, 32, 33,
};

constexpr std::array<const char*, 4> kSymbols = {"a", "b", "c", "d"};

class Builder {
 public:
  Builder(const GenSpec& spec) : spec_(spec), rng_(spec.seed) {}

  IrGraph build();

 private:
  NodeId place(NodeKind kind, NodeId block, AttrMap attrs = {}) {
    const NodeId n = g_.addNode(kind, std::move(attrs));
    g_.addEdge(EdgeKind::kDataflow, n, block, {-1, std::nullopt});
    return n;
  }
  void operand(NodeId user, int position, NodeId value) {
    g_.addEdge(EdgeKind::kDataflow, user, value, {position, std::nullopt});
  }
  void flow(NodeId block, NodeId control, int position,
            std::optional<bool> branch = std::nullopt) {
    g_.addEdge(EdgeKind::kControlflow, block, control, {position, branch});
  }

  std::int32_t randomValue() {
    if (rng_.chance(0.1)) return rng_.pick(kEdgeValues);
    return static_cast<std::int32_t>(rng_.below(65)) - 32;
  }
  NodeId makeConst(std::int32_t value) {
    return place(NodeKind::kConst, startBlock_, {{"value", value}});
  }
  NodeId pickOperand() {
    if (pool_.empty() || rng_.chance(spec_.constRatio)) {
      return makeConst(randomValue());
    }
    if (rng_.chance(0.5)) return pool_.back();
    return pool_[rng_.below(pool_.size())];
  }

  void emitOp(NodeId block);
  void emitMemoryOp(NodeId block);
  void emitRegion(NodeId block, std::size_t ops, std::size_t memOps);
  NodeId emitDiamond(NodeId block, std::size_t thenOps,
                     std::optional<std::size_t> elseOps);

  const GenSpec& spec_;
  Rng rng_;
  IrGraph g_;
  NodeId startBlock_;
  std::vector<NodeId> pool_;
  std::optional<NodeId> memory_;
};

void Builder::emitOp(NodeId block) {
  const NodeKind kind = rng_.pick(kOps);
  AttrMap attrs;
  if (kind == NodeKind::kCmp) attrs.emplace("relation", rng_.pick(kRelations));
  const NodeId lhs = pickOperand();
  const NodeId rhs = kind == NodeKind::kNot ? lhs : pickOperand();
  const NodeId op = place(kind, block, std::move(attrs));
  operand(op, 0, lhs);
  if (kind != NodeKind::kNot) operand(op, 1, rhs);
  pool_.push_back(op);
}

void Builder::emitMemoryOp(NodeId block) {
  const NodeId address = place(NodeKind::kSymConst, startBlock_,
                               {{"symbol", std::string(rng_.pick(kSymbols))}});
  NodeId op;
  if (rng_.chance(0.5)) {
    const NodeId value = pickOperand();
    op = place(NodeKind::kStore, block);
    operand(op, 0, address);
    operand(op, 1, value);
    if (memory_) operand(op, 2, *memory_);
  } else {
    op = place(NodeKind::kLoad, block);
    operand(op, 0, address);
    if (memory_) operand(op, 1, *memory_);
    pool_.push_back(op);
  }
  memory_ = op;
}

void Builder::emitRegion(NodeId block, std::size_t ops, std::size_t memOps) {
  while (ops + memOps > 0) {
    if (rng_.below(ops + memOps) < ops) {
      emitOp(block);
      --ops;
    } else {
      emitMemoryOp(block);
      --memOps;
    }
  }
}

NodeId Builder::emitDiamond(NodeId block, std::size_t thenOps,
                            std::optional<std::size_t> elseOps) {
  bool constant = spec_.conditions == CondMode::kConst;
  if (spec_.conditions == CondMode::kMixed) {
    constant = rng_.chance(spec_.constRatio);
  }
  NodeId selector;
  if (constant) {
    selector = makeConst(rng_.chance(0.5) ? 0 : randomValue());
  } else {
    const NodeId lhs = pickOperand();
    const NodeId rhs = pickOperand();
    selector = place(NodeKind::kCmp, block,
                     {{"relation", rng_.pick(kRelations)}});
    operand(selector, 0, lhs);
    operand(selector, 1, rhs);
  }
  const NodeId cond = place(NodeKind::kCond, block);
  operand(cond, 0, selector);

  const std::vector<NodeId> outer = pool_;
  const NodeId thenBlock = g_.addNode(NodeKind::kBlock);
  flow(thenBlock, cond, 0, true);
  emitRegion(thenBlock, thenOps, 0);
  const NodeId thenValue = pickOperand();
  const NodeId thenJmp = place(NodeKind::kJmp, thenBlock);
  pool_ = outer;

  const NodeId merge = g_.addNode(NodeKind::kBlock);
  NodeId elseValue;
  flow(merge, thenJmp, 0);
  if (elseOps) {
    const NodeId elseBlock = g_.addNode(NodeKind::kBlock);
    flow(elseBlock, cond, 0, false);
    emitRegion(elseBlock, *elseOps, 0);
    elseValue = pickOperand();
    const NodeId elseJmp = place(NodeKind::kJmp, elseBlock);
    pool_ = outer;
    flow(merge, elseJmp, 1);
  } else {
    elseValue = pickOperand();
    flow(merge, cond, 1, false);
  }

  const NodeId phi = place(NodeKind::kPhi, merge);
  operand(phi, 0, thenValue);
  operand(phi, 1, elseValue);
  pool_.push_back(phi);
  return merge;
}

IrGraph Builder::build() {
  startBlock_ = g_.addNode(NodeKind::kStartBlock);
  place(NodeKind::kStart, startBlock_);
  for (std::size_t i = 0; i < spec_.argCount; ++i) {
    pool_.push_back(place(NodeKind::kArgument, startBlock_,
                          {{"index", static_cast<std::int32_t>(i)}}));
  }
  const NodeId startJmp = place(NodeKind::kJmp, startBlock_);
  const NodeId endBlock = g_.addNode(NodeKind::kEndBlock);
  place(NodeKind::kEnd, endBlock);

  NodeId block = g_.addNode(NodeKind::kBlock);
  flow(block, startJmp, 0);

  // Regions: main segment i is followed by diamond i (then, optional else).
  struct Plan {
    std::size_t mainOps = 0;
    std::size_t memOps = 0;
    std::size_t thenOps = 0;
    std::optional<std::size_t> elseOps;
  };
  std::vector<Plan> plan(spec_.diamonds + 1);
  std::vector<std::size_t*> slots;
  for (std::size_t i = 0; i < plan.size(); ++i) {
    slots.push_back(&plan[i].mainOps);
    if (i == spec_.diamonds) break;
    slots.push_back(&plan[i].thenOps);
    if (rng_.chance(0.75)) {
      plan[i].elseOps = 0;
      slots.push_back(&*plan[i].elseOps);
    }
  }
  for (std::size_t i = 0; i < spec_.opCount; ++i) ++*slots[rng_.below(slots.size())];
  for (std::size_t i = 0; i < spec_.memOps; ++i) {
    ++plan[rng_.below(plan.size())].memOps;
  }

  for (std::size_t i = 0; i < plan.size(); ++i) {
    emitRegion(block, plan[i].mainOps, plan[i].memOps);
    if (i < spec_.diamonds) {
      block = emitDiamond(block, plan[i].thenOps, plan[i].elseOps);
    }
  }

  const NodeId result = pool_.empty() ? makeConst(randomValue()) : pool_.back();
  const NodeId ret = place(NodeKind::kReturn, block);
  operand(ret, 0, result);
  if (memory_) operand(ret, 1, *memory_);
  flow(endBlock, ret, 0);
  return std::move(g_);
}

}  // namespace

std::string_view condModeName(CondMode mode) {
  switch (mode) {
    case CondMode::kMixed: return "mixed";
    case CondMode::kConst: return "const";
    case CondMode::kComputed: return "computed";
  }
  return "?";
}

std::optional<CondMode> parseCondMode(std::string_view name) {
  for (CondMode m : {CondMode::kMixed, CondMode::kConst, CondMode::kComputed}) {
    if (condModeName(m) == name) return m;
  }
  return std::nullopt;
}

IrGraph generateGraph(const GenSpec& spec) {
  if (!(spec.constRatio >= 0.0 && spec.constRatio <= 1.0)) {
    throw SpecError("constRatio must lie in [0, 1]");
  }
  if (spec.diamonds > 0 && spec.opCount == 0) {
    throw SpecError("diamonds require opCount > 0");
  }
  if (spec.argCount > static_cast<std::size_t>(
                          std::numeric_limits<std::int32_t>::max())) {
    throw SpecError("argCount out of range");
  }
  return Builder(spec).build();
}

}  // namespace irgraph
