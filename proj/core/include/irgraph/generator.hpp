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
// Seeded generator of valid program graphs for testing and benchmarking.

#ifndef IRGRAPH_GENERATOR_HPP_
#define IRGRAPH_GENERATOR_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "irgraph/graph.hpp"

namespace irgraph {

// How the condition of each Cond/Phi diamond is produced.
enum class CondMode : std::uint8_t {
  kMixed,     // Const with probability constRatio, otherwise a Cmp
  kConst,
  kComputed,  // always a Cmp over earlier values
};

std::string_view condModeName(CondMode mode);
std::optional<CondMode> parseCondMode(std::string_view name);

struct GenSpec {
  std::uint64_t seed = 1;
  std::size_t opCount = 0;
  // Probability that an operand is a fresh Const rather than an earlier value.
  double constRatio = 0.3;
  std::size_t argCount = 0;
  std::size_t diamonds = 0;
  std::size_t memOps = 0;
  CondMode conditions = CondMode::kMixed;
};

// Layout: the StartBlock holds Start, the Arguments, every Const/SymConst and
// a Jmp into the first body block. Body blocks carry the operations; each
// diamond ends a body block with a Cond into a then-block, an optional
// else-block, and a merge block holding a Phi. The last body block holds the
// Return, whose operands are the result and (with memory operations) the
// final memory state. The EndBlock holds End.
//
// Output is deterministic for a given spec and passes verify(_, true).
// Throws SpecError for inconsistent specs, e.g. diamonds without operations.
IrGraph generateGraph(const GenSpec& spec);

}  // namespace irgraph

#endif  // IRGRAPH_GENERATOR_HPP_
