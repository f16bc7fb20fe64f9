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
// 32-bit two's-complement evaluation of binary and Not operations.

#ifndef IRGRAPH_EVALUATE_HPP_
#define IRGRAPH_EVALUATE_HPP_

#include <cstdint>
#include <optional>

#include "irgraph/kinds.hpp"

namespace irgraph {

// Evaluates a base binary kind on two operands.
//
// Add/Sub/Mul wrap. Div truncates toward zero (ceil for a negative quotient,
// floor otherwise) and Mod is the matching remainder, so
// lhs == (lhs / rhs) * rhs + lhs % rhs. Shift amounts use their low five bits;
// Shr is logical, Shrs arithmetic. Cmp yields 1 or 0.
//
// Returns nullopt when the fold is declined: Div or Mod by zero.
// Throws UnknownKind for a non-binary kind and UnknownRelation if a Cmp has
// no relation.
std::optional<std::int32_t> evaluateBinary(NodeKind kind,
                                           std::optional<Relation> relation,
                                           std::int32_t lhs, std::int32_t rhs);

bool evaluateRelation(Relation relation, std::int32_t lhs, std::int32_t rhs);

// Bitwise complement.
constexpr std::int32_t evaluateNot(std::int32_t value) { return ~value; }

}  // namespace irgraph

#endif  // IRGRAPH_EVALUATE_HPP_
