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
// Reference interpreter for program graphs with a resolvable control path.

#ifndef IRGRAPH_INTERPRETER_HPP_
#define IRGRAPH_INTERPRETER_HPP_

#include <cstdint>
#include <span>

#include "irgraph/graph.hpp"

namespace irgraph {

// Walks the control path from StartBlock and returns the value of the
// executed Return's first operand. Argument i reads args[i]. Phi selects the
// operand whose position matches the predecessor edge the block was entered
// through. Cond conditions may be computed; a nonzero value takes the
// branch=true edge.
//
// Memory: Load(address, [memory]), Store(address, value, [memory]) and Sync
// form chains over a store keyed by SymConst symbol (or "#<n>" for a computed
// address), with every location initially 0. Target and immediate variants
// behave like their base kinds; an immediate operand fills the position its
// remaining operand does not occupy, and TargetLoadI/TargetStoreI address
// their symbol attribute.
//
// Throws Unresolvable (no single path, a block entered twice, cyclic
// dataflow, a Phi outside the path, disagreeing Sync operands, or an
// unsupported kind), MissingArgument, and ExecutionTrap for Div/Mod by zero.
std::int32_t interpret(const IrGraph& graph, std::span<const std::int32_t> args);

}  // namespace irgraph

#endif  // IRGRAPH_INTERPRETER_HPP_
