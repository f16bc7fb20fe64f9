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

#include "irgraph/stats.hpp"

#include <algorithm>
#include <sstream>

namespace irgraph {

GraphStats computeStats(const IrGraph& graph) {
  GraphStats s;
  s.nodes = graph.nodeCount();
  s.edges = graph.edgeCount();
  for (NodeId n : graph.nodes()) {
    const NodeKind kind = graph.kind(n);
    ++s.nodeKinds[std::string(kindName(kind))];
    if (isBlock(kind)) ++s.blocks;
    if (isConstKind(kind)) ++s.consts;
    s.maxDegree = std::max(s.maxDegree, graph.degree(n));
  }
  for (EdgeId e : graph.edges()) {
    ++s.edgeKinds[std::string(edgeKindName(graph.edge(e).kind))];
  }
  return s;
}

std::string formatStats(const GraphStats& stats) {
  std::ostringstream out;
  out << "nodes: " << stats.nodes << '\n'
      << "edges: " << stats.edges << '\n'
      << "blocks: " << stats.blocks << '\n'
      << "consts: " << stats.consts << '\n'
      << "max_degree: " << stats.maxDegree << '\n';
  for (const auto& [kind, count] : stats.nodeKinds) {
    out << "node." << kind << ": " << count << '\n';
  }
  for (const auto& [kind, count] : stats.edgeKinds) {
    out << "edge." << kind << ": " << count << '\n';
  }
  return out.str();
}

}  // namespace irgraph
