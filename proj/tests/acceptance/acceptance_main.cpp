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
// Runs every acceptance criterion and prints one [PASS]/[FAIL] line each.
// Exit status is nonzero if any criterion fails.
//
//   acceptance [--write-golden]

#include <chrono>
#include <cmath>
#include <cstring>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "builders.hpp"
#include "checks.hpp"
#include "irgraph/constfold.hpp"
#include "irgraph/error.hpp"
#include "irgraph/evaluate.hpp"
#include "irgraph/generator.hpp"
#include "irgraph/interpreter.hpp"
#include "irgraph/isel.hpp"
#include "irgraph/serialize.hpp"
#include "irgraph/verifier.hpp"
#include "mutations.hpp"
#include "oracle.hpp"

namespace {

using namespace irgraph;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
  // The first few failures verbatim; `failed` counts all of them.
  std::vector<std::string> failures;
  std::size_t failed = 0;

  void fail(std::string what) {
    pass = false;
    if (++failed <= 5) failures.push_back(std::move(what));
  }
};

double secondsSince(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double seconds) {
  std::ostringstream s;
  s.precision(3);
  s << std::fixed << seconds << " s";
  return s.str();
}

// The 200 pipeline graphs: opCount <= 50, diamonds <= 2, const conditions.
GenSpec pipelineSpec(std::uint64_t seed) {
  GenSpec spec;
  spec.seed = seed;
  spec.opCount = seed % 51;
  spec.argCount = 3;
  spec.diamonds = spec.opCount == 0 ? 0 : seed % 3;
  spec.memOps = seed % 4;
  spec.conditions = CondMode::kConst;
  return spec;
}

// Value of a run, or nullopt when it traps on a division by zero.
std::optional<std::int32_t> outcomeOf(const IrGraph& g,
                                      const std::vector<std::int32_t>& args) {
  try {
    return interpret(g, args);
  } catch (const ExecutionTrap&) {
    return std::nullopt;
  }
}

std::string show(const std::optional<std::int32_t>& v) {
  return v ? std::to_string(*v) : "trap";
}

Outcome verifierMutations() {
  Outcome o;
  const auto t0 = Clock::now();
  const IrGraph base = testing::mutationBase();
  if (!verify(base).empty()) o.fail("unmutated graph is not valid");
  int ok = 0;
  const auto mutations = testing::verifierMutations();
  for (const auto& m : mutations) {
    IrGraph g = base;
    m.apply(g);
    const auto got = testing::reportedConstraints(g);
    if (got == m.expected && got.contains(m.constraint)) {
      ++ok;
    } else {
      std::string list;
      for (int c : got) list += std::to_string(c) + " ";
      o.fail("(" + std::to_string(m.constraint) + ") " + m.description +
             ": got { " + list + "}");
    }
  }
  const double t = secondsSince(t0);
  if (t >= 1.0) o.fail("took " + fmt(t));
  o.detail = std::to_string(ok) + "/" + std::to_string(mutations.size()) +
             " constraints, " + fmt(t);
  return o;
}

Outcome evaluatorOracle() {
  Outcome o;
  std::mt19937_64 rng(604);
  auto draw = [&]() -> std::int32_t {
    switch (rng() % 4) {
      case 0: return static_cast<std::int32_t>(rng() % 64) - 32;
      case 1: return static_cast<std::int32_t>(rng() % 2) ? INT32_MIN : INT32_MAX;
      default: return static_cast<std::int32_t>(static_cast<std::uint32_t>(rng()));
    }
  };
  std::size_t compared = 0;
  for (NodeKind k : allNodeKinds()) {
    if (!isBinary(k) || k == NodeKind::kCmp) continue;
    for (int i = 0; i < 1000; ++i, ++compared) {
      const std::int32_t a = draw();
      const std::int32_t b = draw();
      const auto got = evaluateBinary(k, std::nullopt, a, b);
      const auto want = testing::oracleBinary(k, std::nullopt, a, b);
      if (got != want) {
        o.fail(std::string(kindName(k)) + "(" + std::to_string(a) + ", " +
               std::to_string(b) + ") = " + show(got) + ", oracle " + show(want));
      }
    }
  }
  for (Relation r : allRelations()) {
    for (int i = 0; i < 1000; ++i, ++compared) {
      const std::int32_t a = draw();
      const std::int32_t b = i % 4 == 0 ? a : draw();
      const auto got = evaluateBinary(NodeKind::kCmp, r, a, b);
      const auto want = testing::oracleBinary(NodeKind::kCmp, r, a, b);
      if (got != want) {
        o.fail(std::string(relationName(r)) + "(" + std::to_string(a) + ", " +
               std::to_string(b) + ")");
      }
    }
  }
  // The quotient rule written out directly: ceil for negative quotients,
  // floor otherwise.
  for (auto [a, b] : {std::pair{7, 2}, std::pair{-7, 2}, std::pair{7, -2},
                      std::pair{-7, -2}, std::pair{1, 3}, std::pair{-1, 3},
                      std::pair{1, -3}, std::pair{-1, -3}}) {
    const double d = static_cast<double>(a) / b;
    const auto rule = static_cast<std::int32_t>(d < 0 ? std::ceil(d) : std::floor(d));
    const auto got = evaluateBinary(NodeKind::kDiv, std::nullopt, a, b);
    ++compared;
    if (got != rule) {
      o.fail("Div(" + std::to_string(a) + ", " + std::to_string(b) + ") = " +
             show(got) + ", rule gives " + std::to_string(rule));
    }
  }
  o.detail = std::to_string(compared) + " comparisons, " +
             std::to_string(o.failed) + " mismatches";
  return o;
}

Outcome semanticPreservation() {
  Outcome o;
  const auto t0 = Clock::now();
  std::mt19937_64 rng(1);
  std::size_t runs = 0;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const IrGraph g = generateGraph(pipelineSpec(seed));
    IrGraph folded = g;
    runConstantFolding(folded);
    for (int i = 0; i < 5; ++i, ++runs) {
      std::vector<std::int32_t> args;
      for (int a = 0; a < 3; ++a) {
        args.push_back(i == 0 ? a : static_cast<std::int32_t>(rng()));
      }
      const auto want = outcomeOf(g, args);
      const auto got = outcomeOf(folded, args);
      if (want != got) {
        o.fail("seed " + std::to_string(seed) + ": " + show(want) + " became " +
               show(got));
      }
    }
  }
  const double t = secondsSince(t0);
  if (t >= 30.0) o.fail("took " + fmt(t));
  o.detail = std::to_string(runs) + " runs over 200 graphs, " + fmt(t);
  return o;
}

Outcome postFoldInvariants() {
  Outcome o;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    IrGraph g = generateGraph(pipelineSpec(seed));
    runConstantFolding(g);
    for (const std::string& p : testing::postFoldProblems(g)) {
      o.fail("seed " + std::to_string(seed) + ": " + p);
    }
    const std::size_t again = runConstantFolding(g).totalApplied;
    if (again != 0) {
      o.fail("seed " + std::to_string(seed) + ": second run applied " +
             std::to_string(again));
    }
  }
  o.detail = "200 graphs";
  return o;
}

std::string goldenPath(const char* name) {
  return std::string(IRGRAPH_GOLDEN_DIR) + "/" + name;
}

Outcome pullUp(bool writeGolden) {
  Outcome o;
  struct Case {
    NodeKind kind;
    std::int32_t inner, outer, folded;
    const char* file;
  };
  for (const Case& c : {Case{NodeKind::kAdd, 1, 2, 3, "pullup_add.json"},
                        Case{NodeKind::kMul, 2, 5, 10, "pullup_mul.json"}}) {
    testing::Program p = testing::pullUpFixture(c.kind, c.inner, c.outer);
    runConstantFolding(p.g);
    const std::string text = saveGraph(p.g, std::string(c.file));

    // Structure: Return(K(Const folded, Argument 0)).
    const NodeId ret = p.g.nodesOfKind(NodeKind::kReturn).at(0);
    const NodeId top = p.g.edge(p.g.operandEdges(ret).at(0)).target;
    const auto ops = p.g.operandEdges(top);
    const bool shaped =
        p.g.kind(top) == c.kind && ops.size() == 2 &&
        p.g.kind(p.g.edge(ops[0]).target) == NodeKind::kConst &&
        p.g.intAttr(p.g.edge(ops[0]).target, "value") == c.folded &&
        p.g.kind(p.g.edge(ops[1]).target) == NodeKind::kArgument &&
        p.g.nodesOfKind(NodeKind::kConst).size() == 1;
    if (!shaped) o.fail(std::string(c.file) + ": unexpected structure");

    if (writeGolden) {
      std::ofstream(goldenPath(c.file), std::ios::binary) << text;
      continue;
    }
    std::ifstream in(goldenPath(c.file), std::ios::binary);
    if (!in) {
      o.fail(std::string(c.file) + " is missing");
      continue;
    }
    std::ostringstream golden;
    golden << in.rdbuf();
    if (golden.str() != text) o.fail(std::string(c.file) + " differs");
  }
  o.detail = "Add -> (3 + x), Mul -> (10 * x)";
  return o;
}

Outcome instructionSelection() {
  Outcome o;
  std::size_t graphs = 0;
  for (std::uint64_t seed = 1; seed <= 200; ++seed, ++graphs) {
    GenSpec spec = pipelineSpec(seed);
    // Computed conditions keep more binaries and Cmps alive through folding.
    if (seed % 2 == 0) spec.conditions = CondMode::kComputed;
    IrGraph g = generateGraph(spec);
    runConstantFolding(g);
    const IrGraph before = g;
    runInstructionSelection(g);
    for (const std::string& p : testing::postIselProblems(before, g)) {
      o.fail("seed " + std::to_string(seed) + ": " + p);
    }
  }
  o.detail = std::to_string(graphs) + " folded graphs";
  return o;
}

// Node kinds with their attributes, ignoring ids.
std::multiset<std::string> shape(const IrGraph& g) {
  std::multiset<std::string> out;
  for (NodeId n : g.nodes()) {
    std::string s(kindName(g.kind(n)));
    for (const auto& [k, v] : g.attrs(n)) s += " " + k + "=" + formatAttrValue(v);
    out.insert(s);
  }
  for (EdgeId e : g.edges()) {
    const Edge& edge = g.edge(e);
    out.insert(std::string(edgeKindName(edge.kind)) + " " +
               std::string(kindName(g.kind(edge.source))) + "->" +
               std::string(kindName(g.kind(edge.target))) + " " +
               std::to_string(edge.attrs.position));
  }
  return out;
}

Outcome overlapSemantics() {
  Outcome o;
  testing::Program overlap = testing::overlapFixture();
  const PassReport first = foldBinaries(overlap.g);
  if (first.matchesFound != 2 || first.applied != 1 || first.skipped != 1) {
    o.fail("first pass: found " + std::to_string(first.matchesFound) +
           ", applied " + std::to_string(first.applied) + ", skipped " +
           std::to_string(first.skipped));
  }
  const PassReport second = foldBinaries(overlap.g);
  if (second.applied != 1) {
    o.fail("second pass applied " + std::to_string(second.applied));
  }

  testing::Program a = testing::overlapFixture();
  testing::Program b = testing::disjointFixture();
  runConstantFolding(a.g);
  runConstantFolding(b.g);
  if (shape(a.g) != shape(b.g)) o.fail("fixpoints differ");
  if (interpret(a.g, {}) != (7 ^ 15) || interpret(b.g, {}) != (7 ^ 15)) {
    o.fail("fixpoint value is not 7 ^ 15");
  }
  o.detail = "pass 1 applied " + std::to_string(first.applied) + ", skipped " +
             std::to_string(first.skipped);
  return o;
}

Outcome performance() {
  Outcome o;
  GenSpec spec;
  spec.seed = 10000;
  spec.opCount = 10000;
  spec.argCount = 4;
  spec.diamonds = 200;
  spec.memOps = 200;
  IrGraph g = generateGraph(spec);
  const std::size_t nodes = g.nodeCount();

  auto t0 = Clock::now();
  runConstantFolding(g);
  const double fold = secondsSince(t0);
  t0 = Clock::now();
  runInstructionSelection(g);
  const double isel = secondsSince(t0);

  if (fold >= 10.0) o.fail("fold took " + fmt(fold));
  if (isel >= 2.0) o.fail("isel took " + fmt(isel));
  for (const Violation& v : verify(g, true)) o.fail(formatViolation(v));
  o.detail = std::to_string(nodes) + " nodes: fold " + fmt(fold) + ", isel " +
             fmt(isel);
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const bool writeGolden = argc > 1 && std::strcmp(argv[1], "--write-golden") == 0;

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"AC1 verifier mutation suite", verifierMutations},
      {"AC2 evaluateBinary oracle equivalence", evaluatorOracle},
      {"AC3 semantic preservation under folding", semanticPreservation},
      {"AC4 post-fold invariants and idempotence", postFoldInvariants},
      {"AC5 pull-up golden files", [&] { return pullUp(writeGolden); }},
      {"AC6 instruction selection properties", instructionSelection},
      {"AC7 overlap skipping and common fixpoint", overlapSemantics},
      {"AC8 desk-scale performance", performance},
  };

  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << name;
    if (!o.detail.empty()) std::cout << ": " << o.detail;
    std::cout << '\n';
    for (const std::string& f : o.failures) std::cout << "       " << f << '\n';
    if (o.failed > o.failures.size()) {
      std::cout << "       ... " << o.failed - o.failures.size() << " more\n";
    }
    failed += o.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
