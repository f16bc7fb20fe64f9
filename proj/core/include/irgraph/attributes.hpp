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
// Node attribute values and the per-kind attribute schemas.

#ifndef IRGRAPH_ATTRIBUTES_HPP_
#define IRGRAPH_ATTRIBUTES_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>

#include "irgraph/kinds.hpp"

namespace irgraph {

using AttrValue = std::variant<bool, std::int32_t, std::string, Relation>;
using AttrMap = std::map<std::string, AttrValue, std::less<>>;

enum class AttrType : std::uint8_t { kBool, kInt, kText, kRelation };

struct AttrSpec {
  std::string_view name;
  AttrType type;
};

std::string_view attrTypeName(AttrType type);
AttrType attrTypeOf(const AttrValue& value);

// Attributes a node of `kind` carries. Every listed attribute is required.
//   value       Const, TargetConst and the immediate binaries
//   symbol      SymConst, TargetSymConst, TargetLoadI, TargetStoreI
//   relation    Cmp, TargetCmp, TargetCmpI
//   commutative/associative   every binary family member
//   index       Argument (position in the argument list)
std::span<const AttrSpec> attrSchema(NodeKind kind);
std::optional<AttrType> attrTypeIn(NodeKind kind, std::string_view name);

// Validates `attrs` against the schema of `kind` and returns the completed
// map. Missing commutative/associative flags are filled in from the kind; a
// flag contradicting the kind is rejected. Throws SchemaError.
AttrMap conformAttrs(NodeKind kind, AttrMap attrs);

std::string formatAttrValue(const AttrValue& value);

// Dataflow: position -1 is the containment edge, >= 0 an operand index.
// Controlflow: position is the predecessor index; branch is set only on edges
// whose target is a Cond.
struct EdgeAttrs {
  std::int32_t position = 0;
  std::optional<bool> branch;

  friend bool operator==(const EdgeAttrs&, const EdgeAttrs&) = default;
};

}  // namespace irgraph

#endif  // IRGRAPH_ATTRIBUTES_HPP_
