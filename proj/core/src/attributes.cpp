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

#include "irgraph/attributes.hpp"

#include <array>
#include <vector>

#include "irgraph/error.hpp"

namespace irgraph {
namespace {

constexpr AttrSpec kValue{"value", AttrType::kInt};
constexpr AttrSpec kSymbol{"symbol", AttrType::kText};
constexpr AttrSpec kRelation{"relation", AttrType::kRelation};
constexpr AttrSpec kCommutative{"commutative", AttrType::kBool};
constexpr AttrSpec kAssociative{"associative", AttrType::kBool};
constexpr AttrSpec kIndex{"index", AttrType::kInt};

std::vector<AttrSpec> buildSchema(NodeKind kind) {
  std::vector<AttrSpec> schema;
  const NodeKind base = baseKindOf(kind);
  if (isConstKind(kind)) schema.push_back(kValue);
  if (isSymConstKind(kind) || isTargetMemoryNodeI(kind)) {
    schema.push_back(kSymbol);
  }
  if (kind == NodeKind::kArgument) schema.push_back(kIndex);
  if (isBinary(base)) {
    if (isImmediateBinary(kind)) schema.push_back(kValue);
    if (base == NodeKind::kCmp) schema.push_back(kRelation);
    schema.push_back(kCommutative);
    schema.push_back(kAssociative);
  }
  return schema;
}

const std::array<std::vector<AttrSpec>, kNodeKindCount>& schemas() {
  static const auto table = [] {
    std::array<std::vector<AttrSpec>, kNodeKindCount> t;
    for (NodeKind k : allNodeKinds()) {
      t[static_cast<std::size_t>(k)] = buildSchema(k);
    }
    return t;
  }();
  return table;
}

}  // namespace

std::string_view attrTypeName(AttrType type) {
  switch (type) {
    case AttrType::kBool: return "boolean";
    case AttrType::kInt: return "integer";
    case AttrType::kText: return "text";
    case AttrType::kRelation: return "relation";
  }
  return "?";
}

AttrType attrTypeOf(const AttrValue& value) {
  return static_cast<AttrType>(value.index());
}

std::span<const AttrSpec> attrSchema(NodeKind kind) {
  return schemas()[static_cast<std::size_t>(kind)];
}

std::optional<AttrType> attrTypeIn(NodeKind kind, std::string_view name) {
  for (const AttrSpec& spec : attrSchema(kind)) {
    if (spec.name == name) return spec.type;
  }
  return std::nullopt;
}

AttrMap conformAttrs(NodeKind kind, AttrMap attrs) {
  const std::string kname(kindName(kind));
  for (const auto& [name, value] : attrs) {
    const auto expected = attrTypeIn(kind, name);
    if (!expected) {
      throw SchemaError("attribute '" + name + "' is not defined for " + kname);
    }
    if (*expected != attrTypeOf(value)) {
      throw SchemaError("attribute '" + name + "' of " + kname + " must be " +
                        std::string(attrTypeName(*expected)) + ", got " +
                        std::string(attrTypeName(attrTypeOf(value))));
    }
  }
  if (isBinary(baseKindOf(kind))) {
    const std::pair<std::string_view, bool> flags[] = {
        {"commutative", isCommutative(kind)},
        {"associative", isAssociative(kind)},
    };
    for (const auto& [flag, fixed] : flags) {
      auto it = attrs.find(flag);
      if (it == attrs.end()) {
        attrs.emplace(std::string(flag), fixed);
      } else if (std::get<bool>(it->second) != fixed) {
        throw SchemaError(kname + " is " + (fixed ? "" : "not ") +
                          std::string(flag) + " by definition");
      }
    }
  }
  for (const AttrSpec& spec : attrSchema(kind)) {
    if (!attrs.contains(spec.name)) {
      throw SchemaError(kname + " requires attribute '" +
                        std::string(spec.name) + "'");
    }
  }
  return attrs;
}

std::string formatAttrValue(const AttrValue& value) {
  struct Visitor {
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(std::int32_t v) const { return std::to_string(v); }
    std::string operator()(const std::string& s) const { return '"' + s + '"'; }
    std::string operator()(Relation r) const {
      return std::string(relationName(r));
    }
  };
  return std::visit(Visitor{}, value);
}

}  // namespace irgraph
