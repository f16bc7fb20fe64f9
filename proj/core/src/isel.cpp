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

#include "irgraph/isel.hpp"

#include <iostream>

#include "irgraph/error.hpp"
#include "irgraph/verifier.hpp"

namespace irgraph {

RewriteRule selectImmediateBinariesRule() {
  RewriteRule rule;
  rule.name = "select-immediate-binaries";
  rule.matcher = [](const IrGraph& g, Diagnostics&) {
    std::vector<Match> matches;
    for (NodeId b : g.nodes()) {
      if (!isBinary(g.kind(b))) continue;
      const bool commutative = g.boolAttr(b, "commutative");
      for (EdgeId e : g.edgesFrom(b, EdgeKind::kDataflow)) {
        const Edge& edge = g.edge(e);
        const bool eligible = commutative ? edge.attrs.position != -1
                                          : edge.attrs.position == 1;
        if (!eligible || g.kind(edge.target) != NodeKind::kConst) continue;
        Match m;
        m.bind("binary", b);
        m.bind("value", g.intAttr(edge.target, "value"));
        m.bind("edge", e);
        matches.push_back(std::move(m));
        break;
      }
    }
    return matches;
  };
  rule.applier = [](IrGraph& g, const Match& m) {
    const NodeId b = m.node("binary");
    const NodeKind immediate = *immediateKindOf(g.kind(b));
    g.deleteEdge(m.edge("edge"));
    applyTemplateRetype(g, b, immediate, {{"value", m.integer("value")}}, true);
  };
  return rule;
}

RewriteRule selectImmediateMemoryRule() {
  RewriteRule rule;
  rule.name = "select-immediate-memory";
  rule.matcher = [](const IrGraph& g, Diagnostics&) {
    std::vector<Match> matches;
    for (NodeId mem : g.nodes()) {
      if (!isMemoryNode(g.kind(mem))) continue;
      for (EdgeId e : g.edgesFrom(mem, EdgeKind::kDataflow)) {
        const NodeId sym = g.edge(e).target;
        if (g.kind(sym) != NodeKind::kSymConst) continue;
        Match m;
        m.bind("memory", mem);
        m.bind("sym", g.textAttr(sym, "symbol"));
        m.bind("df", e);
        matches.push_back(std::move(m));
      }
    }
    return matches;
  };
  rule.applier = [](IrGraph& g, const Match& m) {
    const NodeId mem = m.node("memory");
    const NodeKind immediate = *immediateKindOf(g.kind(mem));
    g.deleteEdge(m.edge("df"));
    applyTemplateRetype(g, mem, immediate, {{"symbol", m.text("sym")}}, true);
  };
  return rule;
}

RewriteRule retargetRemainingRule() {
  RewriteRule rule;
  rule.name = "retarget-remaining";
  rule.matcher = [](const IrGraph& g, Diagnostics&) {
    std::vector<Match> matches;
    for (NodeId n : g.nodes()) {
      const NodeKind kind = g.kind(n);
      if (isTargetKind(kind) || isRetargetExcluded(kind)) continue;
      Match m;
      m.bind("node", n);
      matches.push_back(std::move(m));
    }
    return matches;
  };
  rule.applier = [](IrGraph& g, const Match& m) {
    const NodeId n = m.node("node");
    applyTemplateRetype(g, n, *targetKindOf(g.kind(n)), {}, true);
  };
  return rule;
}

PassReport selectImmediateBinaries(IrGraph& graph) {
  return matchReplace(graph, selectImmediateBinariesRule());
}

PassReport selectImmediateMemory(IrGraph& graph) {
  return matchReplace(graph, selectImmediateMemoryRule());
}

PassReport deleteOrphanedConsts(IrGraph& graph) {
  const NodeKind kinds[] = {NodeKind::kConst, NodeKind::kSymConst};
  std::vector<ElementRef> orphans;
  for (NodeId c : graph.nodesOfKind(kinds)) {
    if (graph.inDegree(c) == 0) orphans.push_back(ElementRef::of(c));
  }
  return deleteSet(graph, orphans, "delete-orphaned-consts");
}

PassReport retargetRemaining(IrGraph& graph) {
  return matchReplace(graph, retargetRemainingRule());
}

std::vector<PassReport> runInstructionSelection(IrGraph& graph,
                                                const SelectConfig& config) {
  std::vector<PassReport> reports;
  reports.push_back(selectImmediateBinaries(graph));
  reports.push_back(selectImmediateMemory(graph));
  reports.push_back(deleteOrphanedConsts(graph));
  reports.push_back(retargetRemaining(graph));
  if (config.trace) {
    for (const PassReport& r : reports) {
      std::cerr << "[isel] " << summarize(r) << '\n';
    }
    const auto violations = verify(graph);
    if (!violations.empty()) {
      throw VerificationFailed(
          "instruction selection produced an invalid graph: " +
          formatViolation(violations.front()));
    }
  }
  return reports;
}

}  // namespace irgraph
