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
//
// The closed node and edge taxonomies of the program graph.
//
// Every base kind outside the retarget exclusion set (blocks, Argument, Start,
// End, Phi, Return, Sync) has a target counterpart named "Target" + name. The
// twelve binaries and the two memory nodes additionally have an immediate
// counterpart named "Target" + name + "I" that carries one operand as an
// attribute.

#ifndef IRGRAPH_KINDS_HPP_
#define IRGRAPH_KINDS_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

namespace irgraph {

enum class NodeKind : std::uint8_t {
  // Base kinds.
  kBlock,
  kStartBlock,
  kEndBlock,
  kStart,
  kEnd,
  kJmp,
  kCond,
  kReturn,
  kSync,
  kArgument,
  kPhi,
  kConst,
  kSymConst,
  kNot,
  kLoad,
  kStore,
  kAdd,
  kSub,
  kMul,
  kDiv,
  kMod,
  kShl,
  kShr,
  kShrs,
  kAnd,
  kOr,
  kEor,
  kCmp,
  // Target counterparts.
  kTargetJmp,
  kTargetCond,
  kTargetConst,
  kTargetSymConst,
  kTargetNot,
  kTargetLoad,
  kTargetStore,
  kTargetAdd,
  kTargetSub,
  kTargetMul,
  kTargetDiv,
  kTargetMod,
  kTargetShl,
  kTargetShr,
  kTargetShrs,
  kTargetAnd,
  kTargetOr,
  kTargetEor,
  kTargetCmp,
  // Immediate target counterparts.
  kTargetAddI,
  kTargetSubI,
  kTargetMulI,
  kTargetDivI,
  kTargetModI,
  kTargetShlI,
  kTargetShrI,
  kTargetShrsI,
  kTargetAndI,
  kTargetOrI,
  kTargetEorI,
  kTargetCmpI,
  kTargetLoadI,
  kTargetStoreI,
};

inline constexpr std::size_t kNodeKindCount =
    static_cast<std::size_t>(NodeKind::kTargetStoreI) + 1;

enum class EdgeKind : std::uint8_t { kDataflow, kControlflow };

enum class Relation : std::uint8_t {
  kGreater,
  kGreaterEquals,
  kLess,
  kEqual,
  kNotEqual,
  kLessEqual,
  kTrue,
  kFalse,
};

std::string_view kindName(NodeKind kind);
std::optional<NodeKind> parseNodeKind(std::string_view name);
std::span<const NodeKind> allNodeKinds();

std::string_view edgeKindName(EdgeKind kind);
std::optional<EdgeKind> parseEdgeKind(std::string_view name);

std::string_view relationName(Relation relation);
// Throws UnknownRelation.
Relation parseRelation(std::string_view name);
std::span<const Relation> allRelations();

// Block, StartBlock, EndBlock.
bool isBlock(NodeKind kind);
// The twelve base arithmetic/compare kinds Add..Cmp.
bool isBinary(NodeKind kind);
// Load, Store.
bool isMemoryNode(NodeKind kind);
// Target kinds other than the (immediate) memory nodes.
bool isTargetNode(NodeKind kind);
// TargetLoad, TargetStore.
bool isTargetMemoryNode(NodeKind kind);
// TargetLoadI, TargetStoreI.
bool isTargetMemoryNodeI(NodeKind kind);
bool isTargetKind(NodeKind kind);
// TargetAdd..TargetCmp.
bool isTargetBinary(NodeKind kind);
// TargetAddI..TargetCmpI.
bool isImmediateBinary(NodeKind kind);
// Kinds with no different target type: blocks, Argument, Start, End, Phi,
// Return, Sync.
bool isRetargetExcluded(NodeKind kind);

bool isControlNode(NodeKind kind);
bool isCondKind(NodeKind kind);
bool isJmpKind(NodeKind kind);
bool isReturnKind(NodeKind kind);
bool isConstKind(NodeKind kind);
bool isSymConstKind(NodeKind kind);

// The base kind a target or immediate kind was derived from; identity for
// base kinds.
NodeKind baseKindOf(NodeKind kind);
std::optional<NodeKind> targetKindOf(NodeKind kind);
std::optional<NodeKind> immediateKindOf(NodeKind kind);

// Fixed algebraic flags of binary families (base, target and immediate).
bool isCommutative(NodeKind kind);
bool isAssociative(NodeKind kind);

}  // namespace irgraph

#endif  // IRGRAPH_KINDS_HPP_
