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

#include "irgraph/evaluate.hpp"

#include <limits>
#include <string>

#include "irgraph/error.hpp"

namespace irgraph {
namespace {

constexpr std::int32_t kMin = std::numeric_limits<std::int32_t>::min();

std::int32_t wrap(std::uint32_t bits) { return static_cast<std::int32_t>(bits); }
std::uint32_t bits(std::int32_t v) { return static_cast<std::uint32_t>(v); }

}  // namespace

bool evaluateRelation(Relation relation, std::int32_t lhs, std::int32_t rhs) {
  switch (relation) {
    case Relation::kGreater: return lhs > rhs;
    case Relation::kGreaterEquals: return lhs >= rhs;
    case Relation::kLess: return lhs < rhs;
    case Relation::kEqual: return lhs == rhs;
    case Relation::kNotEqual: return lhs != rhs;
    case Relation::kLessEqual: return lhs <= rhs;
    case Relation::kTrue: return true;
    case Relation::kFalse: return false;
  }
  throw UnknownRelation("relation code " +
                        std::to_string(static_cast<int>(relation)));
}

std::optional<std::int32_t> evaluateBinary(NodeKind kind,
                                           std::optional<Relation> relation,
                                           std::int32_t lhs,
                                           std::int32_t rhs) {
  const unsigned amount = bits(rhs) & 31u;
  switch (kind) {
    case NodeKind::kAdd: return wrap(bits(lhs) + bits(rhs));
    case NodeKind::kSub: return wrap(bits(lhs) - bits(rhs));
    case NodeKind::kMul: return wrap(bits(lhs) * bits(rhs));
    case NodeKind::kDiv:
      if (rhs == 0) return std::nullopt;
      if (lhs == kMin && rhs == -1) return kMin;
      return lhs / rhs;
    case NodeKind::kMod:
      if (rhs == 0) return std::nullopt;
      if (lhs == kMin && rhs == -1) return 0;
      return lhs % rhs;
    case NodeKind::kShl: return wrap(bits(lhs) << amount);
    case NodeKind::kShr: return wrap(bits(lhs) >> amount);
    case NodeKind::kShrs: return lhs >> amount;
    case NodeKind::kAnd: return lhs & rhs;
    case NodeKind::kOr: return lhs | rhs;
    case NodeKind::kEor: return lhs ^ rhs;
    case NodeKind::kCmp:
      if (!relation) throw UnknownRelation("Cmp without a relation");
      return evaluateRelation(*relation, lhs, rhs) ? 1 : 0;
    default:
      throw UnknownKind("Don't know how to handle " +
                        std::string(kindName(kind)));
  }
}

}  // namespace irgraph
