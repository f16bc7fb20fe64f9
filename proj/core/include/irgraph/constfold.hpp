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
// Constant folding pipeline. Each pass is usable on its own; the pipeline
// runs the enabled passes in a fixed order until a full sweep changes nothing.

#ifndef IRGRAPH_CONSTFOLD_HPP_
#define IRGRAPH_CONSTFOLD_HPP_

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string_view>
#include <vector>

#include "irgraph/graph.hpp"
#include "irgraph/rewrite.hpp"

namespace irgraph {

enum class FoldPass : std::uint8_t {
  kFoldBinaries,
  kFoldNots,
  kPullUpConstants,
  kDeleteUnusedConsts,
  kMergeDuplicateConsts,
  kFoldConds,
  kEliminateUnreachable,
  kRenumberPhiOperands,
  kSimplifySingleOperandPhis,
  kSkipTrivialJmpBlocks,
};

// Pipeline order: binaries, nots, pull-up, unused consts, duplicate consts,
// conds, unreachable blocks, phi renumbering, single-operand phis, jmp blocks.
std::span<const FoldPass> foldPassOrder();
std::string_view foldPassName(FoldPass pass);
std::optional<FoldPass> parseFoldPass(std::string_view name);

struct FoldConfig {
  std::set<FoldPass> enabled{foldPassOrder().begin(), foldPassOrder().end()};
  std::size_t iterationCap = kDefaultIterationCap;
  // Per-sweep pass summaries to stderr and a verification of the result.
  bool trace = false;

  bool isEnabled(FoldPass pass) const { return enabled.contains(pass); }
};

struct FoldResult {
  // One report per enabled pass, accumulated over all sweeps.
  std::vector<PassReport> passes;
  std::size_t iterations = 0;
  std::size_t totalApplied = 0;
};

// Binary with Const operands at positions 0 and 1 -> Const(result) in the
// StartBlock. Division by zero is left alone and logged.
RewriteRule foldBinariesRule();
// Not(Const) -> Const(~value).
RewriteRule foldNotsRule();
// B2(B1(c1, x), c2) -> B2(B1(c1, c2), x) for B1, B2 both Add or both Mul,
// provided B2 is B1's only consumer.
RewriteRule pullUpConstantsRule();
// Cond(Const) -> Jmp; the Controlflow edge of the branch not taken is
// removed. A nonzero condition takes the branch=true edge.
RewriteRule foldCondsRule();
// Compacts Controlflow positions of each block and realigns its Phis.
RewriteRule renumberPhiOperandsRule();
// Phi(x) -> x for its consumers.
RewriteRule simplifySingleOperandPhisRule();
// Removes a block holding only a Jmp with a single predecessor; its
// successor is wired straight to that predecessor.
RewriteRule skipTrivialJmpBlocksRule();

PassReport foldBinaries(IrGraph& graph);
PassReport foldNots(IrGraph& graph);
PassReport pullUpConstants(IrGraph& graph);
PassReport deleteUnusedConsts(IrGraph& graph);
PassReport mergeDuplicateConsts(IrGraph& graph);
PassReport foldConds(IrGraph& graph);
// Deletes every block not forward-reachable from the StartBlock (the
// EndBlock is kept) together with the nodes it contains.
PassReport eliminateUnreachable(IrGraph& graph);
PassReport renumberPhiOperands(IrGraph& graph);
PassReport simplifySingleOperandPhis(IrGraph& graph);
PassReport skipTrivialJmpBlocks(IrGraph& graph);

PassReport runFoldPass(IrGraph& graph, FoldPass pass);

// Throws IterationLimitExceeded, MalformedCond, and VerificationFailed when
// tracing finds the result invalid.
FoldResult runConstantFolding(IrGraph& graph, const FoldConfig& config = {});

}  // namespace irgraph

#endif  // IRGRAPH_CONSTFOLD_HPP_
