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

#include <gtest/gtest.h>

#include <limits>
#include <random>

#include "irgraph/error.hpp"
#include "irgraph/evaluate.hpp"
#include "oracle.hpp"

namespace irgraph {
namespace {

constexpr std::int32_t kMin = std::numeric_limits<std::int32_t>::min();
constexpr std::int32_t kMax = std::numeric_limits<std::int32_t>::max();

std::optional<std::int32_t> eval(NodeKind k, std::int32_t a, std::int32_t b) {
  return evaluateBinary(k, std::nullopt, a, b);
}

std::optional<std::int32_t> cmp(Relation r, std::int32_t a, std::int32_t b) {
  return evaluateBinary(NodeKind::kCmp, r, a, b);
}

TEST(Evaluate, Examples) {
  EXPECT_EQ(eval(NodeKind::kAdd, 3, 4), 7);
  EXPECT_EQ(eval(NodeKind::kDiv, -7, 2), -3);
  EXPECT_EQ(cmp(Relation::kGreater, 5, 5), 0);
  EXPECT_EQ(cmp(Relation::kTrue, 0, 0), 1);
  EXPECT_EQ(eval(NodeKind::kShrs, -8, 1), -4);
  EXPECT_EQ(eval(NodeKind::kDiv, 1, 0), std::nullopt);
}

TEST(Evaluate, DivisionRoundsTowardZero) {
  EXPECT_EQ(eval(NodeKind::kDiv, 7, 2), 3);
  EXPECT_EQ(eval(NodeKind::kDiv, -7, 2), -3);
  EXPECT_EQ(eval(NodeKind::kDiv, 7, -2), -3);
  EXPECT_EQ(eval(NodeKind::kDiv, -7, -2), 3);
  EXPECT_EQ(eval(NodeKind::kDiv, 1, 3), 0);
  EXPECT_EQ(eval(NodeKind::kDiv, -1, 3), 0);
  EXPECT_EQ(eval(NodeKind::kMod, -7, 2), -1);
  EXPECT_EQ(eval(NodeKind::kMod, 7, -2), 1);
  EXPECT_EQ(eval(NodeKind::kMod, 5, 0), std::nullopt);
}

TEST(Evaluate, WrapAround) {
  EXPECT_EQ(eval(NodeKind::kAdd, kMax, 1), kMin);
  EXPECT_EQ(eval(NodeKind::kSub, kMin, 1), kMax);
  EXPECT_EQ(eval(NodeKind::kMul, 65536, 65536), 0);
  EXPECT_EQ(eval(NodeKind::kDiv, kMin, -1), kMin);
  EXPECT_EQ(eval(NodeKind::kMod, kMin, -1), 0);
}

TEST(Evaluate, Shifts) {
  EXPECT_EQ(eval(NodeKind::kShl, 1, 31), kMin);
  EXPECT_EQ(eval(NodeKind::kShl, 1, 32), 1);
  EXPECT_EQ(eval(NodeKind::kShl, 3, -1), kMin);
  EXPECT_EQ(eval(NodeKind::kShr, -1, 28), 15);
  EXPECT_EQ(eval(NodeKind::kShrs, -1, 28), -1);
  EXPECT_EQ(eval(NodeKind::kShrs, kMin, 33), kMin / 2);
}

TEST(Evaluate, Bitwise) {
  EXPECT_EQ(eval(NodeKind::kAnd, 12, 10), 8);
  EXPECT_EQ(eval(NodeKind::kOr, 12, 10), 14);
  EXPECT_EQ(eval(NodeKind::kEor, 12, 10), 6);
  EXPECT_EQ(evaluateNot(0), -1);
  EXPECT_EQ(evaluateNot(-1), 0);
}

TEST(Evaluate, Relations) {
  EXPECT_EQ(cmp(Relation::kGreaterEquals, 5, 5), 1);
  EXPECT_EQ(cmp(Relation::kLess, -1, 0), 1);
  EXPECT_EQ(cmp(Relation::kEqual, 4, 4), 1);
  EXPECT_EQ(cmp(Relation::kNotEqual, 4, 4), 0);
  EXPECT_EQ(cmp(Relation::kLessEqual, 5, 4), 0);
  EXPECT_EQ(cmp(Relation::kFalse, 1, 1), 0);
}

TEST(Evaluate, Errors) {
  EXPECT_THROW(eval(NodeKind::kCmp, 1, 2), UnknownRelation);
  EXPECT_THROW(eval(NodeKind::kNot, 1, 2), UnknownKind);
  EXPECT_THROW(eval(NodeKind::kConst, 1, 2), UnknownKind);
}

std::int32_t draw(std::mt19937_64& rng) {
  static constexpr std::int32_t kEdges[] = {kMin, kMin + 1, -1, 0, 1, 2,
                                            31, 32, kMax - 1, kMax};
  switch (rng() % 4) {
    case 0: return kEdges[rng() % std::size(kEdges)];
    case 1: return static_cast<std::int32_t>(rng() % 200) - 100;
    default: return static_cast<std::int32_t>(static_cast<std::uint32_t>(rng()));
  }
}

TEST(Evaluate, MatchesOracle) {
  std::mt19937_64 rng(20261016);
  for (NodeKind k : allNodeKinds()) {
    if (!isBinary(k) || k == NodeKind::kCmp) continue;
    for (int i = 0; i < 1000; ++i) {
      const std::int32_t a = draw(rng);
      const std::int32_t b = draw(rng);
      ASSERT_EQ(eval(k, a, b), testing::oracleBinary(k, std::nullopt, a, b))
          << kindName(k) << "(" << a << ", " << b << ")";
    }
  }
  for (Relation r : allRelations()) {
    for (int i = 0; i < 1000; ++i) {
      const std::int32_t a = draw(rng);
      const std::int32_t b = i % 5 == 0 ? a : draw(rng);
      ASSERT_EQ(cmp(r, a, b), testing::oracleBinary(NodeKind::kCmp, r, a, b))
          << relationName(r) << "(" << a << ", " << b << ")";
    }
  }
}

}  // namespace
}  // namespace irgraph
