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

#include "irgraph/kinds.hpp"

#include <array>
#include <string>

#include "irgraph/error.hpp"

namespace irgraph {
namespace {

enum class Tier : std::uint8_t { kBase, kTarget, kImmediate };

struct KindInfo {
  std::string_view name;
  NodeKind base;
  Tier tier;
};

using K = NodeKind;

constexpr std::array<KindInfo, kNodeKindCount> kKinds = {{
    {"Block", K::kBlock, Tier::kBase},
    {"StartBlock", K::kStartBlock, Tier::kBase},
    {"EndBlock", K::kEndBlock, Tier::kBase},
    {"Start", K::kStart, Tier::kBase},
    {"End", K::kEnd, Tier::kBase},
    {"Jmp", K::kJmp, Tier::kBase},
    {"Cond", K::kCond, Tier::kBase},
    {"Return", K::kReturn, Tier::kBase},
    {"Sync", K::kSync, Tier::kBase},
    {"Argument", K::kArgument, Tier::kBase},
    {"Phi", K::kPhi, Tier::kBase},
    {"Const", K::kConst, Tier::kBase},
    {"SymConst", K::kSymConst, Tier::kBase},
    {"Not", K::kNot, Tier::kBase},
    {"Load", K::kLoad, Tier::kBase},
    {"Store", K::kStore, Tier::kBase},
    {"Add", K::kAdd, Tier::kBase},
    {"Sub", K::kSub, Tier::kBase},
    {"Mul", K::kMul, Tier::kBase},
    {"Div", K::kDiv, Tier::kBase},
    {"Mod", K::kMod, Tier::kBase},
    {"Shl", K::kShl, Tier::kBase},
    {"Shr", K::kShr, Tier::kBase},
    {"Shrs", K::kShrs, Tier::kBase},
    {"And", K::kAnd, Tier::kBase},
    {"Or", K::kOr, Tier::kBase},
    {"Eor", K::kEor, Tier::kBase},
    {"Cmp", K::kCmp, Tier::kBase},
    {"TargetJmp", K::kJmp, Tier::kTarget},
    {"TargetCond", K::kCond, Tier::kTarget},
    {"TargetConst", K::kConst, Tier::kTarget},
    {"TargetSymConst", K::kSymConst, Tier::kTarget},
    {"TargetNot", K::kNot, Tier::kTarget},
    {"TargetLoad", K::kLoad, Tier::kTarget},
    {"TargetStore", K::kStore, Tier::kTarget},
    {"TargetAdd", K::kAdd, Tier::kTarget},
    {"TargetSub", K::kSub, Tier::kTarget},
    {"TargetMul", K::kMul, Tier::kTarget},
    {"TargetDiv", K::kDiv, Tier::kTarget},
    {"TargetMod", K::kMod, Tier::kTarget},
    {"TargetShl", K::kShl, Tier::kTarget},
    {"TargetShr", K::kShr, Tier::kTarget},
    {"TargetShrs", K::kShrs, Tier::kTarget},
    {"TargetAnd", K::kAnd, Tier::kTarget},
    {"TargetOr", K::kOr, Tier::kTarget},
    {"TargetEor", K::kEor, Tier::kTarget},
    {"TargetCmp", K::kCmp, Tier::kTarget},
    {"TargetAddI", K::kAdd, Tier::kImmediate},
    {"TargetSubI", K::kSub, Tier::kImmediate},
    {"TargetMulI", K::kMul, Tier::kImmediate},
    {"TargetDivI", K::kDiv, Tier::kImmediate},
    {"TargetModI", K::kMod, Tier::kImmediate},
    {"TargetShlI", K::kShl, Tier::kImmediate},
    {"TargetShrI", K::kShr, Tier::kImmediate},
    {"TargetShrsI", K::kShrs, Tier::kImmediate},
    {"TargetAndI", K::kAnd, Tier::kImmediate},
    {"TargetOrI", K::kOr, Tier::kImmediate},
    {"TargetEorI", K::kEor, Tier::kImmediate},
    {"TargetCmpI", K::kCmp, Tier::kImmediate},
    {"TargetLoadI", K::kLoad, Tier::kImmediate},
    {"TargetStoreI", K::kStore, Tier::kImmediate},
}};

constexpr std::array<NodeKind, kNodeKindCount> makeAllKinds() {
  std::array<NodeKind, kNodeKindCount> kinds{};
  for (std::size_t i = 0; i < kNodeKindCount; ++i) {
    kinds[i] = static_cast<NodeKind>(i);
  }
  return kinds;
}

constexpr std::array<NodeKind, kNodeKindCount> kAllKinds = makeAllKinds();

constexpr std::array<Relation, 8> kAllRelations = {
    Relation::kGreater, Relation::kGreaterEquals, Relation::kLess,
    Relation::kEqual,   Relation::kNotEqual,      Relation::kLessEqual,
    Relation::kTrue,    Relation::kFalse,
};

const KindInfo& info(NodeKind kind) {
  return kKinds[static_cast<std::size_t>(kind)];
}

// Every table row must sit at its enumerator's index.
constexpr bool tableIsAligned() {
  for (std::size_t i = 0; i < kNodeKindCount; ++i) {
    const KindInfo& row = kKinds[i];
    if (row.tier == Tier::kBase && row.base != static_cast<NodeKind>(i)) {
      return false;
    }
  }
  return kKinds[static_cast<std::size_t>(K::kTargetJmp)].name == "TargetJmp" &&
         kKinds[static_cast<std::size_t>(K::kTargetAddI)].name ==
             "TargetAddI" &&
         kKinds[static_cast<std::size_t>(K::kTargetStoreI)].name ==
             "TargetStoreI";
}
static_assert(tableIsAligned());

}  // namespace

std::string_view kindName(NodeKind kind) { return info(kind).name; }

std::optional<NodeKind> parseNodeKind(std::string_view name) {
  for (std::size_t i = 0; i < kNodeKindCount; ++i) {
    if (kKinds[i].name == name) return static_cast<NodeKind>(i);
  }
  return std::nullopt;
}

std::span<const NodeKind> allNodeKinds() { return kAllKinds; }

std::string_view edgeKindName(EdgeKind kind) {
  return kind == EdgeKind::kDataflow ? "Dataflow" : "Controlflow";
}

std::optional<EdgeKind> parseEdgeKind(std::string_view name) {
  if (name == "Dataflow") return EdgeKind::kDataflow;
  if (name == "Controlflow") return EdgeKind::kControlflow;
  return std::nullopt;
}

std::string_view relationName(Relation relation) {
  switch (relation) {
    case Relation::kGreater: return "GREATER";
    case Relation::kGreaterEquals: return "GREATER_EQUALS";
    case Relation::kLess: return "LESS";
    case Relation::kEqual: return "EQUAL";
    case Relation::kNotEqual: return "NOT_EQUAL";
    case Relation::kLessEqual: return "LESS_EQUAL";
    case Relation::kTrue: return "TRUE";
    case Relation::kFalse: return "FALSE";
  }
  return "?";
}

Relation parseRelation(std::string_view name) {
  for (Relation r : kAllRelations) {
    if (relationName(r) == name) return r;
  }
  throw UnknownRelation("Don't know how to handle relation '" +
                        std::string(name) + "'");
}

std::span<const Relation> allRelations() { return kAllRelations; }

bool isBlock(NodeKind kind) {
  return kind == K::kBlock || kind == K::kStartBlock || kind == K::kEndBlock;
}

bool isBinary(NodeKind kind) {
  return kind >= K::kAdd && kind <= K::kCmp;
}

bool isMemoryNode(NodeKind kind) {
  return kind == K::kLoad || kind == K::kStore;
}

bool isTargetMemoryNode(NodeKind kind) {
  return kind == K::kTargetLoad || kind == K::kTargetStore;
}

bool isTargetMemoryNodeI(NodeKind kind) {
  return kind == K::kTargetLoadI || kind == K::kTargetStoreI;
}

bool isTargetKind(NodeKind kind) { return info(kind).tier != Tier::kBase; }

bool isTargetNode(NodeKind kind) {
  return isTargetKind(kind) && !isTargetMemoryNode(kind) &&
         !isTargetMemoryNodeI(kind);
}

bool isTargetBinary(NodeKind kind) {
  return info(kind).tier == Tier::kTarget && isBinary(info(kind).base);
}

bool isImmediateBinary(NodeKind kind) {
  return info(kind).tier == Tier::kImmediate && isBinary(info(kind).base);
}

bool isRetargetExcluded(NodeKind kind) {
  switch (kind) {
    case K::kBlock:
    case K::kStartBlock:
    case K::kEndBlock:
    case K::kArgument:
    case K::kStart:
    case K::kEnd:
    case K::kPhi:
    case K::kReturn:
    case K::kSync:
      return true;
    default:
      return false;
  }
}

bool isControlNode(NodeKind kind) {
  return isCondKind(kind) || isJmpKind(kind) || isReturnKind(kind);
}

bool isCondKind(NodeKind kind) {
  return kind == K::kCond || kind == K::kTargetCond;
}

bool isJmpKind(NodeKind kind) {
  return kind == K::kJmp || kind == K::kTargetJmp;
}

bool isReturnKind(NodeKind kind) { return kind == K::kReturn; }

bool isConstKind(NodeKind kind) {
  return kind == K::kConst || kind == K::kTargetConst;
}

bool isSymConstKind(NodeKind kind) {
  return kind == K::kSymConst || kind == K::kTargetSymConst;
}

NodeKind baseKindOf(NodeKind kind) { return info(kind).base; }

std::optional<NodeKind> targetKindOf(NodeKind kind) {
  if (isTargetKind(kind) || isRetargetExcluded(kind)) return std::nullopt;
  const std::string name = "Target" + std::string(kindName(kind));
  return parseNodeKind(name);
}

std::optional<NodeKind> immediateKindOf(NodeKind kind) {
  if (!isBinary(kind) && !isMemoryNode(kind)) return std::nullopt;
  const std::string name = "Target" + std::string(kindName(kind)) + "I";
  return parseNodeKind(name);
}

bool isCommutative(NodeKind kind) {
  switch (baseKindOf(kind)) {
    case K::kAdd:
    case K::kMul:
    case K::kAnd:
    case K::kOr:
    case K::kEor:
      return true;
    default:
      return false;
  }
}

bool isAssociative(NodeKind kind) { return isCommutative(kind); }

}  // namespace irgraph
