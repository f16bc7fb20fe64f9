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

#include "builders.hpp"
#include "checks.hpp"
#include "irgraph/constfold.hpp"
#include "irgraph/error.hpp"
#include "irgraph/generator.hpp"
#include "irgraph/interpreter.hpp"
#include "irgraph/isel.hpp"
#include "irgraph/serialize.hpp"
#include "irgraph/verifier.hpp"

namespace irgraph {
namespace {

using testing::operand;
using testing::place;
using testing::Program;

NodeId retValue(const IrGraph& g) {
  const NodeId ret = g.nodesOfKind(NodeKind::kReturn).at(0);
  return g.edge(g.operandEdges(ret).at(0)).target;
}

TEST(SelectImmediateBinaries, CommutativeAnyPosition) {
  Program p;
  const NodeId x = p.argument(0);
  p.ret(p.binary(NodeKind::kAdd, x, p.konst(5)));
  EXPECT_EQ(selectImmediateBinaries(p.g).applied, 1u);
  const NodeId imm = retValue(p.g);
  EXPECT_EQ(p.g.kind(imm), NodeKind::kTargetAddI);
  EXPECT_EQ(p.g.intAttr(imm, "value"), 5);
  ASSERT_EQ(p.g.operandEdges(imm).size(), 1u);
  EXPECT_EQ(p.g.edge(p.g.operandEdges(imm)[0]).target, x);
  EXPECT_EQ(p.g.edge(p.g.operandEdges(imm)[0]).attrs.position, 0);

  Program q;
  q.ret(q.binary(NodeKind::kMul, q.konst(5), q.argument(0)));
  EXPECT_EQ(selectImmediateBinaries(q.g).applied, 1u);
  EXPECT_EQ(q.g.kind(retValue(q.g)), NodeKind::kTargetMulI);
}

TEST(SelectImmediateBinaries, NonCommutativeOnlyPositionOne) {
  Program p;
  p.ret(p.binary(NodeKind::kSub, p.konst(5), p.argument(0)));
  EXPECT_EQ(selectImmediateBinaries(p.g).matchesFound, 0u);

  Program q;
  const NodeId x = q.argument(0);
  q.ret(q.binary(NodeKind::kSub, x, q.konst(5)));
  selectImmediateBinaries(q.g);
  const NodeId imm = retValue(q.g);
  EXPECT_EQ(q.g.kind(imm), NodeKind::kTargetSubI);
  EXPECT_EQ(q.g.intAttr(imm, "value"), 5);
  EXPECT_EQ(q.g.edge(q.g.operandEdges(imm)[0]).target, x);
}

TEST(SelectImmediateBinaries, CmpKeepsRelation) {
  Program p;
  p.ret(p.binary(NodeKind::kCmp, p.argument(0), p.konst(3), Relation::kLess));
  selectImmediateBinaries(p.g);
  const NodeId imm = retValue(p.g);
  EXPECT_EQ(p.g.kind(imm), NodeKind::kTargetCmpI);
  EXPECT_EQ(p.g.intAttr(imm, "value"), 3);
  EXPECT_EQ(p.g.relationAttr(imm), Relation::kLess);
}

TEST(SelectImmediateBinaries, TwoConstsLowestEdgeWins) {
  Program p;
  const NodeId a = p.konst(1);
  const NodeId b = p.konst(2);
  const NodeId add = p.g.addNode(NodeKind::kAdd);
  p.g.addEdge(EdgeKind::kDataflow, add, p.body, {-1, std::nullopt});
  operand(p.g, add, 1, b);
  operand(p.g, add, 0, a);
  p.ret(add);
  selectImmediateBinaries(p.g);
  const NodeId imm = retValue(p.g);
  EXPECT_EQ(p.g.intAttr(imm, "value"), 2);
  EXPECT_EQ(p.g.edge(p.g.operandEdges(imm)[0]).target, a);
}

TEST(SelectImmediateMemory, LoadAndStore) {
  Program p;
  const NodeId a = place(p.g, NodeKind::kSymConst, p.startBlock,
                         {{"symbol", std::string("a")}});
  const NodeId g = place(p.g, NodeKind::kSymConst, p.startBlock,
                         {{"symbol", std::string("g")}});
  const NodeId v = p.argument(0);
  const NodeId store = place(p.g, NodeKind::kStore, p.body);
  operand(p.g, store, 0, g);
  operand(p.g, store, 1, v);
  const NodeId load = place(p.g, NodeKind::kLoad, p.body);
  operand(p.g, load, 0, a);
  operand(p.g, load, 1, store);
  p.ret(load);
  EXPECT_EQ(selectImmediateMemory(p.g).applied, 2u);
  const NodeId li = retValue(p.g);
  EXPECT_EQ(p.g.kind(li), NodeKind::kTargetLoadI);
  EXPECT_EQ(p.g.textAttr(li, "symbol"), "a");
  EXPECT_EQ(p.g.inDegree(a), 0u);
  const NodeId si = p.g.edge(p.g.operandEdges(li)[0]).target;
  EXPECT_EQ(p.g.kind(si), NodeKind::kTargetStoreI);
  EXPECT_EQ(p.g.textAttr(si, "symbol"), "g");
  ASSERT_EQ(p.g.operandEdges(si).size(), 1u);
  EXPECT_EQ(p.g.edge(p.g.operandEdges(si)[0]).target, v);

  EXPECT_EQ(deleteOrphanedConsts(p.g).applied, 2u);
  EXPECT_FALSE(p.g.contains(a));
  EXPECT_FALSE(p.g.contains(g));
  EXPECT_TRUE(verify(p.g, true).empty());
}

TEST(SelectImmediateMemory, ComputedAddressUntouched) {
  Program p;
  const NodeId addr = p.binary(NodeKind::kAdd, p.argument(0), p.konst(4));
  const NodeId load = place(p.g, NodeKind::kLoad, p.body);
  operand(p.g, load, 0, addr);
  p.ret(load);
  EXPECT_EQ(selectImmediateMemory(p.g).matchesFound, 0u);
}

TEST(DeleteOrphanedConsts, Basics) {
  Program p;
  const auto d = testing::addDiamond(p, p.argument(0), p.konst(1), p.konst(2));
  p.ret(d.phi, d.merge);
  EXPECT_EQ(deleteOrphanedConsts(p.g).applied, 0u);
  p.konst(3);
  EXPECT_EQ(deleteOrphanedConsts(p.g).applied, 1u);
  EXPECT_EQ(p.g.nodesOfKind(NodeKind::kConst).size(), 2u);
}

TEST(RetargetRemaining, Examples) {
  Program p;
  const NodeId c = p.konst(3);
  const auto d = testing::addDiamond(p, p.argument(0), c, p.konst(4));
  p.ret(d.phi, d.merge);
  retargetRemaining(p.g);
  EXPECT_EQ(p.g.kind(d.phi), NodeKind::kPhi);
  EXPECT_FALSE(p.g.contains(c));
  bool found = false;
  for (NodeId n : p.g.nodesOfKind(NodeKind::kTargetConst)) {
    found = found || p.g.intAttr(n, "value") == 3;
  }
  EXPECT_TRUE(found);
  EXPECT_EQ(retargetRemaining(p.g).applied, 0u);
}

TEST(InstructionSelection, NoBinariesOnlyRetargets) {
  Program p;
  p.ret(p.konst(42));
  const auto reports = runInstructionSelection(p.g);
  ASSERT_EQ(reports.size(), 4u);
  EXPECT_EQ(reports[0].applied, 0u);
  EXPECT_EQ(reports[1].applied, 0u);
  EXPECT_EQ(reports[2].applied, 0u);
  EXPECT_GT(reports[3].applied, 0u);
}

TEST(InstructionSelection, ReturnOfAddImmediate) {
  Program p;
  const NodeId x = p.argument(0);
  p.ret(p.binary(NodeKind::kAdd, x, p.konst(2)));
  runInstructionSelection(p.g);
  const NodeId imm = retValue(p.g);
  EXPECT_EQ(p.g.kind(imm), NodeKind::kTargetAddI);
  EXPECT_EQ(p.g.edge(p.g.operandEdges(imm)[0]).target, x);
  EXPECT_EQ(p.g.kind(x), NodeKind::kArgument);
  EXPECT_TRUE(p.g.nodesOfKind(NodeKind::kConst).empty());
  EXPECT_TRUE(p.g.nodesOfKind(NodeKind::kTargetConst).empty());
  const std::int32_t args[] = {5};
  EXPECT_EQ(interpret(p.g, args), 7);
}

TEST(InstructionSelection, SecondRunAppliesNothing) {
  Program p;
  p.ret(p.binary(NodeKind::kSub, p.konst(9), p.argument(0)));
  runInstructionSelection(p.g);
  for (const PassReport& r : runInstructionSelection(p.g)) {
    EXPECT_EQ(r.applied, 0u) << r.rule;
  }
}

TEST(InstructionSelection, PropertiesOnGeneratedGraphs) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    GenSpec spec;
    spec.seed = seed;
    spec.opCount = 30;
    spec.argCount = 2;
    spec.diamonds = seed % 3;
    spec.memOps = seed % 4;
    IrGraph g = generateGraph(spec);
    runConstantFolding(g);
    const IrGraph before = g;
    runInstructionSelection(g);
    const auto problems = testing::postIselProblems(before, g);
    EXPECT_TRUE(problems.empty()) << "seed " << seed << ": " << problems.front();
  }
}

TEST(InstructionSelection, PreservesSemantics) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    GenSpec spec;
    spec.seed = seed;
    spec.opCount = 25;
    spec.argCount = 2;
    spec.diamonds = seed % 3;
    spec.memOps = seed % 5;
    spec.conditions = CondMode::kComputed;
    IrGraph g = generateGraph(spec);
    IrGraph selected = g;
    runInstructionSelection(selected);
    for (std::int32_t a : {-3, 0, 17}) {
      const std::int32_t args[] = {a, 5 - a};
      std::optional<std::int32_t> want;
      std::optional<std::int32_t> got;
      try { want = interpret(g, args); } catch (const ExecutionTrap&) {}
      try { got = interpret(selected, args); } catch (const ExecutionTrap&) {}
      EXPECT_EQ(want, got) << "seed " << seed;
    }
  }
}

}  // namespace
}  // namespace irgraph
