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

#ifndef IRGRAPH_STATS_HPP_
#define IRGRAPH_STATS_HPP_

#include <cstddef>
#include <map>
#include <string>

#include "irgraph/graph.hpp"

namespace irgraph {

struct GraphStats {
  std::size_t nodes = 0;
  std::size_t edges = 0;
  // Keyed by kind name; kinds that do not occur are absent.
  std::map<std::string, std::size_t> nodeKinds;
  std::map<std::string, std::size_t> edgeKinds;
  std::size_t blocks = 0;
  // Const and TargetConst.
  std::size_t consts = 0;
  // Largest in plus out degree, counting all edge kinds.
  std::size_t maxDegree = 0;
};

GraphStats computeStats(const IrGraph& graph);

// Stable "key: value" lines, kinds in name order.
std::string formatStats(const GraphStats& stats);

}  // namespace irgraph

#endif  // IRGRAPH_STATS_HPP_
