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

#include <stdexcept>

#include "builders.hpp"
#include "irgraph/generator.hpp"
#include "irgraph/serialize.hpp"
#include "irgraph/verifier.hpp"
#include "mutations.hpp"

namespace irgraph {
namespace {

using testing::operand;
using testing::place;
using testing::Program;
using testing::reportedConstraints;

TEST(Verifier, MutationBaseIsValid) {
  const IrGraph g = testing::mutationBase();
  EXPECT_TRUE(verify(g, true).empty());
  EXPECT_TRUE(checkValidity(g));
}

TEST(Verifier, EachMutationHitsItsConstraint) {
  for (const auto& m : testing::verifierMutations()) {
    IrGraph g = testing::mutationBase();
    m.apply(g);
    EXPECT_EQ(reportedConstraints(g), m.expected) << m.description;
    EXPECT_TRUE(m.expected.contains(m.constraint));
    EXPECT_FALSE(checkValidity(g));
  }
}

TEST(Verifier, EmptyGraph) {
  IrGraph g;
  EXPECT_EQ(reportedConstraints(g), (std::set<int>{1, 2}));
  EXPECT_FALSE(checkValidity(g));
}

TEST(Verifier, ConstOutsideStartBlock) {
  Program p;
  const NodeId c = p.g.addNode(NodeKind::kConst, {{"value", 1}});
  p.g.addEdge(EdgeKind::kDataflow, c, p.body, {-1, std::nullopt});
  p.ret(c);
  const auto vs = verify(p.g);
  ASSERT_EQ(vs.size(), 1u);
  EXPECT_EQ(vs[0].constraint, 5);
  EXPECT_EQ(vs[0].elements.front(), ElementRef::of(c));
}

TEST(Verifier, PhiWithTooManyOperands) {
  Program p;
  const NodeId x = p.argument(0);
  const NodeId phi = place(p.g, NodeKind::kPhi, p.body);
  for (int i = 0; i < 3; ++i) operand(p.g, phi, i, x);
  p.ret(phi);
  const auto vs = verify(p.g);
  ASSERT_FALSE(vs.empty());
  for (const Violation& v : vs) EXPECT_EQ(v.constraint, 6);
  EXPECT_NE(vs[0].message.find("6.1"), std::string::npos);
}

TEST(Verifier, IsolatedNode) {
  Program p;
  p.ret(p.konst(1));
  const NodeId lone = p.g.addNode(NodeKind::kSync);
  bool found = false;
  for (const Violation& v : verify(p.g)) {
    if (v.constraint == 8) {
      found = true;
      EXPECT_EQ(v.elements, std::vector<ElementRef>{ElementRef::of(lone)});
    }
  }
  EXPECT_TRUE(found);
}

TEST(Verifier, StrictBranchLabels) {
  Program p;
  const auto d = testing::addDiamond(p, p.argument(0), p.konst(1), p.konst(2));
  p.ret(d.phi, d.merge);
  EXPECT_TRUE(verify(p.g, true).empty());
  p.g.setEdgeAttrs(d.elseEdge, {0, std::nullopt});
  EXPECT_TRUE(verify(p.g, false).empty());
  EXPECT_EQ(reportedConstraints(p.g, true), std::set<int>{9});
}

TEST(Verifier, StrictBranchOnJmpEdge) {
  Program p;
  p.ret(p.konst(1));
  p.g.setEdgeAttrs(p.g.edgesTo(p.startJmp)[0], {0, true});
  EXPECT_EQ(reportedConstraints(p.g, true), std::set<int>{9});
}

TEST(Verifier, StrictSymConstPlacement) {
  Program p;
  const NodeId s = place(p.g, NodeKind::kSymConst, p.body,
                         {{"symbol", std::string("a")}});
  const NodeId load = place(p.g, NodeKind::kLoad, p.body);
  operand(p.g, load, 0, s);
  p.ret(load);
  EXPECT_TRUE(verify(p.g, false).empty());
  EXPECT_EQ(reportedConstraints(p.g, true), std::set<int>{5});
}

TEST(Verifier, ReadOnlyAndFormat) {
  IrGraph g = testing::mutationBase();
  testing::verifierMutations()[0].apply(g);
  const std::string before = saveGraph(g);
  const auto vs = verify(g, true);
  EXPECT_EQ(saveGraph(g), before);
  ASSERT_FALSE(vs.empty());
  const std::string line = formatViolation(vs[0]);
  EXPECT_EQ(line.rfind("C1: ", 0), 0u) << line;
}

TEST(Verifier, CheckValidityAgreesWithVerify) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    GenSpec spec;
    spec.seed = seed;
    spec.opCount = seed;
    spec.diamonds = seed % 3;
    IrGraph g = generateGraph(spec);
    EXPECT_EQ(checkValidity(g), verify(g).empty());
    const auto muts = testing::verifierMutations();
    try {
      muts[seed % muts.size()].apply(g);
    } catch (const std::logic_error&) {
      continue;  // nothing for this mutation to act on
    }
    EXPECT_EQ(checkValidity(g), verify(g).empty());
  }
}

}  // namespace
}  // namespace irgraph
