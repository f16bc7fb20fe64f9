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

#include "irgraph/interpreter.hpp"

#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "irgraph/error.hpp"
#include "irgraph/evaluate.hpp"

namespace irgraph {
namespace {

struct NodeIdHash {
  std::size_t operator()(NodeId id) const noexcept { return id.value; }
};

class Interpreter {
 public:
  Interpreter(const IrGraph& graph, std::span<const std::int32_t> args)
      : g_(graph), args_(args) {}

  std::int32_t run();

 private:
  // Operand at `position`, if present.
  std::optional<NodeId> operandAt(NodeId node, int position) const {
    for (EdgeId e : g_.operandEdges(node)) {
      if (g_.edge(e).attrs.position == position) return g_.edge(e).target;
    }
    return std::nullopt;
  }
  NodeId requireOperand(NodeId node, int position) const {
    if (auto op = operandAt(node, position)) return *op;
    throw Unresolvable(toString(node) + " lacks operand " +
                       std::to_string(position));
  }

  std::int32_t value(NodeId node);
  std::int32_t compute(NodeId node);
  std::string addressKey(NodeId node);
  std::int32_t read(std::optional<NodeId> memory, const std::string& key);
  // The control edge taken out of `control`, which ends the current block.
  EdgeId successor(NodeId control);

  const IrGraph& g_;
  std::span<const std::int32_t> args_;
  std::unordered_map<NodeId, int, NodeIdHash> entry_;
  std::unordered_map<NodeId, std::int32_t, NodeIdHash> values_;
  std::unordered_set<NodeId, NodeIdHash> active_;
};

std::int32_t Interpreter::value(NodeId node) {
  if (auto it = values_.find(node); it != values_.end()) return it->second;
  if (!active_.insert(node).second) {
    throw Unresolvable("cyclic dataflow through " + toString(node));
  }
  const std::int32_t v = compute(node);
  active_.erase(node);
  values_.emplace(node, v);
  return v;
}

std::int32_t Interpreter::compute(NodeId node) {
  const NodeKind kind = g_.kind(node);
  const NodeKind base = baseKindOf(kind);
  const auto& attrs = g_.attrs(node);

  if (isBinary(base)) {
    std::optional<Relation> relation;
    if (auto it = attrs.find("relation"); it != attrs.end()) {
      relation = std::get<Relation>(it->second);
    }
    std::int32_t lhs;
    std::int32_t rhs;
    if (isImmediateBinary(kind)) {
      const auto ops = g_.operandEdges(node);
      if (ops.size() != 1) {
        throw Unresolvable(toString(node) + " needs exactly one operand");
      }
      const std::int32_t imm = g_.intAttr(node, "value");
      const std::int32_t var = value(g_.edge(ops[0]).target);
      const bool varLeft = g_.edge(ops[0]).attrs.position == 0;
      lhs = varLeft ? var : imm;
      rhs = varLeft ? imm : var;
    } else {
      lhs = value(requireOperand(node, 0));
      rhs = value(requireOperand(node, 1));
    }
    auto result = evaluateBinary(base, relation, lhs, rhs);
    if (!result) {
      throw ExecutionTrap(std::string(kindName(kind)) + " by zero at " +
                          toString(node));
    }
    return *result;
  }

  switch (base) {
    case NodeKind::kConst:
      return g_.intAttr(node, "value");
    case NodeKind::kArgument: {
      const std::int32_t index = g_.intAttr(node, "index");
      if (index < 0 || static_cast<std::size_t>(index) >= args_.size()) {
        throw MissingArgument("argument " + std::to_string(index) +
                              " not supplied");
      }
      return args_[static_cast<std::size_t>(index)];
    }
    case NodeKind::kNot:
      return evaluateNot(value(requireOperand(node, 0)));
    case NodeKind::kPhi: {
      const auto block = blockOf(g_, node);
      const auto it = block ? entry_.find(*block) : entry_.end();
      if (it == entry_.end()) {
        throw Unresolvable("Phi " + toString(node) + " is not on the path");
      }
      return value(requireOperand(node, it->second));
    }
    case NodeKind::kLoad:
      if (kind == NodeKind::kTargetLoadI) {
        return read(operandAt(node, 1), g_.textAttr(node, "symbol"));
      }
      return read(operandAt(node, 1), addressKey(requireOperand(node, 0)));
    default:
      throw Unresolvable(std::string(kindName(kind)) + " " + toString(node) +
                         " has no value");
  }
}

std::string Interpreter::addressKey(NodeId node) {
  if (isSymConstKind(g_.kind(node))) return g_.textAttr(node, "symbol");
  return "#" + std::to_string(value(node));
}

std::int32_t Interpreter::read(std::optional<NodeId> memory,
                               const std::string& key) {
  // Iterative walk; memory chains can be as long as the graph.
  while (memory) {
    const NodeId m = *memory;
    const NodeKind kind = g_.kind(m);
    switch (baseKindOf(kind)) {
      case NodeKind::kStore: {
        const std::string target = kind == NodeKind::kTargetStoreI
                                       ? g_.textAttr(m, "symbol")
                                       : addressKey(requireOperand(m, 0));
        if (target == key) return value(requireOperand(m, 1));
        memory = operandAt(m, 2);
        break;
      }
      case NodeKind::kLoad:
        memory = operandAt(m, 1);
        break;
      case NodeKind::kSync: {
        std::optional<std::int32_t> agreed;
        for (EdgeId e : g_.operandEdges(m)) {
          const std::int32_t v = read(g_.edge(e).target, key);
          if (agreed && *agreed != v) {
            throw Unresolvable("Sync " + toString(m) +
                               " merges disagreeing states");
          }
          agreed = v;
        }
        return agreed.value_or(0);
      }
      case NodeKind::kStart:
        return 0;
      default:
        throw Unresolvable(std::string(kindName(kind)) + " " + toString(m) +
                           " is not a memory state");
    }
  }
  return 0;
}

EdgeId Interpreter::successor(NodeId control) {
  const auto incoming = g_.edgesTo(control, EdgeKind::kControlflow);
  if (isCondKind(g_.kind(control))) {
    const bool taken = value(requireOperand(control, 0)) != 0;
    std::optional<EdgeId> chosen;
    for (EdgeId e : incoming) {
      if (g_.edge(e).attrs.branch == taken) {
        if (chosen) {
          throw Unresolvable("Cond " + toString(control) +
                             " has several taken edges");
        }
        chosen = e;
      }
    }
    if (!chosen) {
      throw Unresolvable("Cond " + toString(control) + " has no taken edge");
    }
    return *chosen;
  }
  if (incoming.size() != 1) {
    throw Unresolvable("Jmp " + toString(control) + " has " +
                       std::to_string(incoming.size()) + " successors");
  }
  return incoming.front();
}

std::int32_t Interpreter::run() {
  const auto start = uniqueNodeOfKind(g_, NodeKind::kStartBlock);
  if (!start) throw Unresolvable("no unique StartBlock");
  NodeId block = *start;
  entry_.emplace(block, -1);
  while (true) {
    const auto control = controlNodeOf(g_, block);
    if (!control) {
      throw Unresolvable("block " + toString(block) +
                         " has no single control node");
    }
    if (isReturnKind(g_.kind(*control))) {
      return value(requireOperand(*control, 0));
    }
    const Edge& taken = g_.edge(successor(*control));
    block = taken.source;
    if (!entry_.emplace(block, taken.attrs.position).second) {
      throw Unresolvable("block " + toString(block) + " entered twice");
    }
  }
}

}  // namespace

std::int32_t interpret(const IrGraph& graph,
                       std::span<const std::int32_t> args) {
  return Interpreter(graph, args).run();
}

}  // namespace irgraph
