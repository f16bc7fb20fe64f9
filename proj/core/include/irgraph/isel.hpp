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
// Instruction selection: lowers the graph onto target kinds in four passes,
// each run once, in this order.

#ifndef IRGRAPH_ISEL_HPP_
#define IRGRAPH_ISEL_HPP_

#include <vector>

#include "irgraph/graph.hpp"
#include "irgraph/rewrite.hpp"

namespace irgraph {

struct SelectConfig {
  // Pass summaries to stderr and a verification of the result.
  bool trace = false;
};

// A binary with a Const operand becomes Target<K>I carrying the Const's value.
// Non-commutative binaries only absorb the operand at position 1; for
// commutative ones any operand qualifies and the lowest edge id wins.
RewriteRule selectImmediateBinariesRule();
// Load/Store addressed through a SymConst becomes TargetLoadI/TargetStoreI
// carrying the symbol.
RewriteRule selectImmediateMemoryRule();
// Every remaining node with a target counterpart is retyped to it.
RewriteRule retargetRemainingRule();

PassReport selectImmediateBinaries(IrGraph& graph);
PassReport selectImmediateMemory(IrGraph& graph);
// Deletes Const and SymConst nodes nothing depends on any more.
PassReport deleteOrphanedConsts(IrGraph& graph);
PassReport retargetRemaining(IrGraph& graph);

// Throws VerificationFailed when tracing finds the result invalid.
std::vector<PassReport> runInstructionSelection(IrGraph& graph,
                                                const SelectConfig& config = {});

}  // namespace irgraph

#endif  // IRGRAPH_ISEL_HPP_
