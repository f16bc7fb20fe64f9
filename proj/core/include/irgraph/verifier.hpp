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
// Structural validity checks. Constraint numbers:
//
//   1  exactly one Start and one StartBlock
//   2  exactly one End and one EndBlock
//   3  Dataflow edges into a block have position -1
//   4  every non-block node has exactly one containment edge to a block
//   5  every Const is contained in the StartBlock (strict: every SymConst
//      too)
//   6  Phi operands line up with the Controlflow predecessors of its block
//   7  no empty blocks (the EndBlock is exempt)
//   8  no isolated nodes
//   9  strict only: every Cond has one branch=true and one branch=false
//      predecessor edge, and branch appears on no other edge

#ifndef IRGRAPH_VERIFIER_HPP_
#define IRGRAPH_VERIFIER_HPP_

#include <string>
#include <vector>

#include "irgraph/graph.hpp"

namespace irgraph {

struct Violation {
  int constraint = 0;
  std::vector<ElementRef> elements;
  std::string message;
};

// Every constraint is checked independently; an empty result means valid.
std::vector<Violation> verify(const IrGraph& graph, bool strict = false);

bool checkValidity(const IrGraph& graph);

// "C<k>: <message> [n1, e2]"
std::string formatViolation(const Violation& violation);

}  // namespace irgraph

#endif  // IRGRAPH_VERIFIER_HPP_
