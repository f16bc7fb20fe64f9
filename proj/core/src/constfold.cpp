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

#include "irgraph/constfold.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <iostream>
#include <map>
#include <memory>

#include "irgraph/error.hpp"
#include "irgraph/evaluate.hpp"
#include "irgraph/verifier.hpp"

namespace irgraph {
namespace {

constexpr std::array<FoldPass, 10> kOrder = {
    FoldPass::kFoldBinaries,         FoldPass::kFoldNots,
    FoldPass::kPullUpConstants,      FoldPass::kDeleteUnusedConsts,
    FoldPass::kMergeDuplicateConsts, FoldPass::kFoldConds,
    FoldPass::kEliminateUnreachable, FoldPass::kRenumberPhiOperands,
    FoldPass::kSimplifySingleOperandPhis, FoldPass::kSkipTrivialJmpBlocks,
};

std::int32_t position(const IrGraph& g, EdgeId e) {
  return g.edge(e).attrs.position;
}

NodeId target(const IrGraph& g, EdgeId e) { return g.edge(e).target; }

bool isConst(const IrGraph& g, NodeId n) {
  return g.kind(n) == NodeKind::kConst;
}

// Operand edges at exactly positions 0..arity-1, or empty.
std::vector<EdgeId> exactOperands(const IrGraph& g, NodeId n,
                                  std::size_t arity) {
  auto ops = g.operandEdges(n);
  if (ops.size() != arity) return {};
  for (std::size_t i = 0; i < arity; ++i) {
    if (position(g, ops[i]) != static_cast<std::int32_t>(i)) return {};
  }
  return ops;
}

// Shared shape of foldBinaries/foldNots: `op` is replaced by a Const holding
// `value`, contained in the StartBlock; its own out-edges disappear.
void replaceWithConst(IrGraph& g, const Match& m, NodeId startBlock) {
  const NodeId op = m.node("op");
  const auto& edges = m.edgeList("edges");
  const NodeId c = applyTemplateRetype(
      g, op, NodeKind::kConst, {{"value", m.integer("value")}}, false);
  for (EdgeId e : edges) {
    if (g.contains(e)) g.deleteEdge(e);
  }
  g.addEdge(EdgeKind::kDataflow, c, startBlock, {-1, std::nullopt});
}

Match constFoldMatch(const IrGraph& g, NodeId op, std::int32_t value) {
  Match m;
  m.bind("op", op);
  m.bind("value", value);
  m.bind("edges", g.edgesFrom(op));
  m.touch(g.edgesTo(op));
  return m;
}

std::optional<NodeId> findStartBlock(const IrGraph& g, Diagnostics& diags) {
  auto sb = uniqueNodeOfKind(g, NodeKind::kStartBlock);
  if (!sb) diags.push_back("no unique StartBlock; nothing folded");
  return sb;
}

}  // namespace

std::span<const FoldPass> foldPassOrder() { return kOrder; }

std::string_view foldPassName(FoldPass pass) {
  switch (pass) {
    case FoldPass::kFoldBinaries: return "fold-binaries";
    case FoldPass::kFoldNots: return "fold-nots";
    case FoldPass::kPullUpConstants: return "pull-up-constants";
    case FoldPass::kDeleteUnusedConsts: return "delete-unused-consts";
    case FoldPass::kMergeDuplicateConsts: return "merge-duplicate-consts";
    case FoldPass::kFoldConds: return "fold-conds";
    case FoldPass::kEliminateUnreachable: return "eliminate-unreachable";
    case FoldPass::kRenumberPhiOperands: return "renumber-phi-operands";
    case FoldPass::kSimplifySingleOperandPhis: return "simplify-phis";
    case FoldPass::kSkipTrivialJmpBlocks: return "skip-trivial-jmp-blocks";
  }
  return "?";
}

std::optional<FoldPass> parseFoldPass(std::string_view name) {
  for (FoldPass p : kOrder) {
    if (foldPassName(p) == name) return p;
  }
  return std::nullopt;
}

RewriteRule foldBinariesRule() {
  auto startBlock = std::make_shared<NodeId>();
  RewriteRule rule;
  rule.name = std::string(foldPassName(FoldPass::kFoldBinaries));
  rule.matcher = [startBlock](const IrGraph& g, Diagnostics& diags) {
    std::vector<Match> matches;
    const auto sb = findStartBlock(g, diags);
    if (!sb) return matches;
    *startBlock = *sb;
    for (NodeId n : g.nodes()) {
      const NodeKind kind = g.kind(n);
      if (!isBinary(kind)) continue;
      const auto ops = exactOperands(g, n, 2);
      if (ops.empty()) continue;
      const NodeId lhs = target(g, ops[0]);
      const NodeId rhs = target(g, ops[1]);
      if (!isConst(g, lhs) || !isConst(g, rhs)) continue;
      std::optional<Relation> relation;
      if (kind == NodeKind::kCmp) relation = g.relationAttr(n);
      const auto value = evaluateBinary(kind, relation, g.intAttr(lhs, "value"),
                                        g.intAttr(rhs, "value"));
      if (!value) {
        diags.push_back("declined to fold " + toString(n) + " (" +
                        std::string(kindName(kind)) + " by zero)");
        continue;
      }
      Match m = constFoldMatch(g, n, *value);
      m.bind("lconst", lhs);
      m.bind("rconst", rhs);
      matches.push_back(std::move(m));
    }
    return matches;
  };
  rule.applier = [startBlock](IrGraph& g, const Match& m) {
    replaceWithConst(g, m, *startBlock);
  };
  return rule;
}

RewriteRule foldNotsRule() {
  auto startBlock = std::make_shared<NodeId>();
  RewriteRule rule;
  rule.name = std::string(foldPassName(FoldPass::kFoldNots));
  rule.matcher = [startBlock](const IrGraph& g, Diagnostics& diags) {
    std::vector<Match> matches;
    const auto sb = findStartBlock(g, diags);
    if (!sb) return matches;
    *startBlock = *sb;
    for (NodeId n : g.nodesOfKind(NodeKind::kNot)) {
      const auto ops = exactOperands(g, n, 1);
      if (ops.empty()) continue;
      const NodeId operand = target(g, ops[0]);
      if (!isConst(g, operand)) continue;
      Match m =
          constFoldMatch(g, n, evaluateNot(g.intAttr(operand, "value")));
      m.bind("operand", operand);
      matches.push_back(std::move(m));
    }
    return matches;
  };
  rule.applier = [startBlock](IrGraph& g, const Match& m) {
    replaceWithConst(g, m, *startBlock);
  };
  return rule;
}

RewriteRule pullUpConstantsRule() {
  RewriteRule rule;
  rule.name = std::string(foldPassName(FoldPass::kPullUpConstants));
  rule.matcher = [](const IrGraph& g, Diagnostics&) {
    std::vector<Match> matches;
    for (NodeId outer : g.nodes()) {
      const NodeKind kind = g.kind(outer);
      if (kind != NodeKind::kAdd && kind != NodeKind::kMul) continue;
      const auto outerOps = exactOperands(g, outer, 2);
      if (outerOps.empty()) continue;
      // One operand must be a Const, the other a same-kind binary.
      std::optional<EdgeId> constEdge;
      std::optional<EdgeId> innerEdge;
      for (EdgeId e : outerOps) {
        const NodeId t = target(g, e);
        if (isConst(g, t)) {
          constEdge = e;
        } else if (g.kind(t) == kind) {
          innerEdge = e;
        }
      }
      if (!constEdge || !innerEdge) continue;
      const NodeId inner = target(g, *innerEdge);
      if (inner == outer || g.inDegree(inner) != 1) continue;
      const auto innerOps = exactOperands(g, inner, 2);
      if (innerOps.empty()) continue;
      const bool lhsConst = isConst(g, target(g, innerOps[0]));
      const bool rhsConst = isConst(g, target(g, innerOps[1]));
      if (lhsConst == rhsConst) continue;
      const EdgeId variableEdge = lhsConst ? innerOps[1] : innerOps[0];
      const NodeId variable = target(g, variableEdge);
      if (variable == outer || variable == inner) continue;

      Match m;
      m.bind("outer", outer);
      m.bind("inner", inner);
      m.bind("innerConst", target(g, lhsConst ? innerOps[0] : innerOps[1]));
      m.bind("outerConst", target(g, *constEdge));
      m.bind("variable", variable);
      m.bind("variableEdge", variableEdge);
      m.bind("outerConstEdge", *constEdge);
      m.touch(outerOps);
      m.touch(innerOps);
      matches.push_back(std::move(m));
    }
    return matches;
  };
  rule.applier = [](IrGraph& g, const Match& m) {
    g.setEdgeTarget(m.edge("variableEdge"), m.node("outerConst"));
    g.setEdgeTarget(m.edge("outerConstEdge"), m.node("variable"));
  };
  return rule;
}

RewriteRule foldCondsRule() {
  RewriteRule rule;
  rule.name = std::string(foldPassName(FoldPass::kFoldConds));
  rule.matcher = [](const IrGraph& g, Diagnostics& diags) {
    std::vector<Match> matches;
    for (NodeId cond : g.nodesOfKind(NodeKind::kCond)) {
      const auto ops = g.operandEdges(cond);
      if (ops.empty() || position(g, ops[0]) != 0) continue;
      const NodeId selector = target(g, ops[0]);
      if (!isConst(g, selector)) continue;
      if (ops.size() != 1) {
        diags.push_back(toString(cond) + " has extra operands; not folded");
        continue;
      }
      const auto incoming = g.edgesTo(cond, EdgeKind::kControlflow);
      std::optional<EdgeId> onTrue;
      std::optional<EdgeId> onFalse;
      for (EdgeId e : incoming) {
        const auto branch = g.edge(e).attrs.branch;
        if (branch && *branch && !onTrue) {
          onTrue = e;
        } else if (branch && !*branch && !onFalse) {
          onFalse = e;
        } else {
          onTrue.reset();
          break;
        }
      }
      if (incoming.size() != 2 || !onTrue || !onFalse) {
        throw MalformedCond(toString(cond) +
                            " needs exactly one branch=true and one "
                            "branch=false Controlflow edge");
      }
      const bool taken = g.intAttr(selector, "value") != 0;
      Match m;
      m.bind("cond", cond);
      m.bind("selector", selector);
      m.bind("selectorEdge", ops[0]);
      m.bind("keep", taken ? *onTrue : *onFalse);
      m.bind("drop", taken ? *onFalse : *onTrue);
      if (auto c = g.containmentEdge(cond)) m.touch(*c);
      matches.push_back(std::move(m));
    }
    return matches;
  };
  rule.applier = [](IrGraph& g, const Match& m) {
    g.deleteEdge(m.edge("drop"));
    applyTemplateRetype(g, m.node("cond"), NodeKind::kJmp, {}, true);
    g.deleteEdge(m.edge("selectorEdge"));
    const EdgeId keep = m.edge("keep");
    g.setEdgeAttrs(keep, {g.edge(keep).attrs.position, std::nullopt});
  };
  return rule;
}

RewriteRule renumberPhiOperandsRule() {
  RewriteRule rule;
  rule.name = std::string(foldPassName(FoldPass::kRenumberPhiOperands));
  rule.matcher = [](const IrGraph& g, Diagnostics&) {
    std::vector<Match> matches;
    for (NodeId block : g.nodes()) {
      if (!isBlock(g.kind(block))) continue;
      auto preds = g.edgesFrom(block, EdgeKind::kControlflow);
      std::stable_sort(preds.begin(), preds.end(), [&](EdgeId a, EdgeId b) {
        return position(g, a) < position(g, b);
      });
      std::set<std::int32_t> positions;
      bool dense = true;
      for (std::size_t i = 0; i < preds.size(); ++i) {
        positions.insert(position(g, preds[i]));
        if (position(g, preds[i]) != static_cast<std::int32_t>(i)) {
          dense = false;
        }
      }
      std::vector<NodeId> phis;
      std::vector<EdgeId> phiOperands;
      bool stray = false;
      for (NodeId n : containedNodes(g, block)) {
        if (g.kind(n) != NodeKind::kPhi) continue;
        phis.push_back(n);
        for (EdgeId e : g.operandEdges(n)) {
          phiOperands.push_back(e);
          if (!positions.contains(position(g, e))) stray = true;
        }
      }
      if (dense && !stray) continue;
      Match m;
      m.bind("block", block);
      m.bind("preds", preds);
      m.bind("phis", phis);
      m.touch(phiOperands);
      matches.push_back(std::move(m));
    }
    return matches;
  };
  rule.applier = [](IrGraph& g, const Match& m) {
    const auto& preds = m.edgeList("preds");
    std::map<std::int32_t, std::int32_t> renumber;
    for (std::size_t i = 0; i < preds.size(); ++i) {
      const EdgeAttrs attrs = g.edge(preds[i]).attrs;
      const auto fresh = static_cast<std::int32_t>(i);
      renumber.emplace(attrs.position, fresh);
      if (attrs.position != fresh) g.setEdgeAttrs(preds[i], {fresh, attrs.branch});
    }
    for (NodeId phi : std::get<std::vector<NodeId>>(m.get("phis"))) {
      for (EdgeId e : g.operandEdges(phi)) {
        const std::int32_t pos = position(g, e);
        auto it = renumber.find(pos);
        if (it == renumber.end()) {
          g.deleteEdge(e);
        } else if (it->second != pos) {
          g.setEdgeAttrs(e, {it->second, std::nullopt});
        }
      }
    }
  };
  return rule;
}

RewriteRule simplifySingleOperandPhisRule() {
  RewriteRule rule;
  rule.name = std::string(foldPassName(FoldPass::kSimplifySingleOperandPhis));
  rule.matcher = [](const IrGraph& g, Diagnostics&) {
    std::vector<Match> matches;
    for (NodeId phi : g.nodesOfKind(NodeKind::kPhi)) {
      const auto ops = g.operandEdges(phi);
      if (ops.size() != 1) continue;
      const NodeId value = target(g, ops[0]);
      if (value == phi) continue;
      Match m;
      m.bind("phi", phi);
      m.bind("operandEdge", ops[0]);
      m.bind("value", value);
      m.touch(g.edgesFrom(phi));
      m.touch(g.edgesTo(phi));
      matches.push_back(std::move(m));
    }
    return matches;
  };
  rule.applier = [](IrGraph& g, const Match& m) {
    const NodeId phi = m.node("phi");
    for (EdgeId e : g.edgesFrom(phi)) g.deleteEdge(e);
    g.relinkIncidentEdges(phi, m.node("value"));
    g.deleteNode(phi);
  };
  return rule;
}

RewriteRule skipTrivialJmpBlocksRule() {
  RewriteRule rule;
  rule.name = std::string(foldPassName(FoldPass::kSkipTrivialJmpBlocks));
  rule.matcher = [](const IrGraph& g, Diagnostics&) {
    std::vector<Match> matches;
    for (NodeId block : g.nodesOfKind(NodeKind::kBlock)) {
      const auto inside = containedNodes(g, block);
      if (inside.size() != 1 || g.kind(inside[0]) != NodeKind::kJmp) continue;
      const NodeId jmp = inside[0];
      const auto preds = g.edgesFrom(block, EdgeKind::kControlflow);
      if (preds.size() != 1 || g.outDegree(block) != 1) continue;
      const NodeId pred = target(g, preds[0]);
      if (pred == jmp) continue;
      const auto succs = g.edgesTo(jmp, EdgeKind::kControlflow);
      if (succs.size() != 1) continue;
      Match m;
      m.bind("block", block);
      m.bind("jmp", jmp);
      m.bind("predEdge", preds[0]);
      m.bind("pred", pred);
      m.bind("succEdges", succs);
      m.touch(g.edgesFrom(jmp));
      m.touch(g.edgesTo(block));
      matches.push_back(std::move(m));
    }
    return matches;
  };
  rule.applier = [](IrGraph& g, const Match& m) {
    const NodeId pred = m.node("pred");
    const auto predBranch = g.edge(m.edge("predEdge")).attrs.branch;
    for (EdgeId e : m.edgeList("succEdges")) {
      g.setEdgeTarget(e, pred);
      const std::int32_t pos = g.edge(e).attrs.position;
      g.setEdgeAttrs(e, {pos, isCondKind(g.kind(pred)) ? predBranch
                                                       : std::nullopt});
    }
    g.deleteEdge(m.edge("predEdge"));
    g.deleteNode(m.node("jmp"));
    g.deleteNode(m.node("block"));
  };
  return rule;
}

PassReport foldBinaries(IrGraph& graph) {
  return matchReplace(graph, foldBinariesRule());
}

PassReport foldNots(IrGraph& graph) {
  return matchReplace(graph, foldNotsRule());
}

PassReport pullUpConstants(IrGraph& graph) {
  return matchReplace(graph, pullUpConstantsRule());
}

PassReport deleteUnusedConsts(IrGraph& graph) {
  std::vector<ElementRef> unused;
  for (NodeId c : graph.nodesOfKind(NodeKind::kConst)) {
    if (graph.inDegree(c) == 0) unused.push_back(ElementRef::of(c));
  }
  return deleteSet(graph, unused,
                   foldPassName(FoldPass::kDeleteUnusedConsts));
}

PassReport mergeDuplicateConsts(IrGraph& graph) {
  std::map<std::int32_t, std::vector<NodeId>> byValue;
  for (NodeId c : graph.nodesOfKind(NodeKind::kConst)) {
    byValue[graph.intAttr(c, "value")].push_back(c);
  }
  DuplicatesMap duplicates;
  for (const auto& [value, group] : byValue) {
    if (group.size() < 2) continue;
    duplicates.emplace(group.front(),
                       std::set<NodeId>(group.begin() + 1, group.end()));
  }
  return mergeVertices(graph, duplicates,
                       foldPassName(FoldPass::kMergeDuplicateConsts));
}

PassReport foldConds(IrGraph& graph) {
  return matchReplace(graph, foldCondsRule());
}

PassReport eliminateUnreachable(IrGraph& graph) {
  const std::string name(foldPassName(FoldPass::kEliminateUnreachable));
  const auto start = uniqueNodeOfKind(graph, NodeKind::kStartBlock);
  if (!start) {
    PassReport report;
    report.rule = name;
    report.diagnostics.push_back("no unique StartBlock; nothing eliminated");
    return report;
  }
  std::set<NodeId> reached{*start};
  std::deque<NodeId> worklist{*start};
  while (!worklist.empty()) {
    const NodeId block = worklist.front();
    worklist.pop_front();
    for (NodeId n : containedNodes(graph, block)) {
      if (!isControlNode(graph.kind(n))) continue;
      for (EdgeId e : graph.edgesTo(n, EdgeKind::kControlflow)) {
        const NodeId succ = graph.edge(e).source;
        if (reached.insert(succ).second) worklist.push_back(succ);
      }
    }
  }
  std::vector<ElementRef> dead;
  for (NodeId block : graph.nodes()) {
    const NodeKind kind = graph.kind(block);
    if (!isBlock(kind) || kind == NodeKind::kEndBlock) continue;
    if (reached.contains(block)) continue;
    dead.push_back(ElementRef::of(block));
    for (NodeId n : containedNodes(graph, block)) {
      dead.push_back(ElementRef::of(n));
    }
  }
  return deleteSet(graph, dead, name);
}

PassReport renumberPhiOperands(IrGraph& graph) {
  return matchReplace(graph, renumberPhiOperandsRule());
}

PassReport simplifySingleOperandPhis(IrGraph& graph) {
  return matchReplace(graph, simplifySingleOperandPhisRule());
}

PassReport skipTrivialJmpBlocks(IrGraph& graph) {
  return matchReplace(graph, skipTrivialJmpBlocksRule());
}

PassReport runFoldPass(IrGraph& graph, FoldPass pass) {
  switch (pass) {
    case FoldPass::kFoldBinaries: return foldBinaries(graph);
    case FoldPass::kFoldNots: return foldNots(graph);
    case FoldPass::kPullUpConstants: return pullUpConstants(graph);
    case FoldPass::kDeleteUnusedConsts: return deleteUnusedConsts(graph);
    case FoldPass::kMergeDuplicateConsts: return mergeDuplicateConsts(graph);
    case FoldPass::kFoldConds: return foldConds(graph);
    case FoldPass::kEliminateUnreachable: return eliminateUnreachable(graph);
    case FoldPass::kRenumberPhiOperands: return renumberPhiOperands(graph);
    case FoldPass::kSimplifySingleOperandPhis:
      return simplifySingleOperandPhis(graph);
    case FoldPass::kSkipTrivialJmpBlocks: return skipTrivialJmpBlocks(graph);
  }
  throw UnknownKind("fold pass " + std::to_string(static_cast<int>(pass)));
}

FoldResult runConstantFolding(IrGraph& graph, const FoldConfig& config) {
  FoldResult result;
  std::vector<FoldPass> passes;
  for (FoldPass p : kOrder) {
    if (!config.isEnabled(p)) continue;
    passes.push_back(p);
    PassReport empty;
    empty.rule = std::string(foldPassName(p));
    result.passes.push_back(std::move(empty));
  }

  std::size_t sweep = 0;
  const IterationOutcome outcome = iteratively(
      graph,
      [&](IrGraph& g) {
        ++sweep;
        std::vector<PassReport> reports;
        for (std::size_t i = 0; i < passes.size(); ++i) {
          PassReport r = runFoldPass(g, passes[i]);
          if (config.trace) {
            std::cerr << "[fold sweep " << sweep << "] " << summarize(r)
                      << '\n';
            for (const auto& d : r.diagnostics) std::cerr << "    " << d << '\n';
          }
          result.passes[i].absorb(r);
          reports.push_back(std::move(r));
        }
        return reports;
      },
      config.iterationCap);
  result.iterations = outcome.iterations;
  result.totalApplied = outcome.totalApplied;

  if (config.trace) {
    const auto violations = verify(graph);
    if (!violations.empty()) {
      throw VerificationFailed("constant folding produced an invalid graph: " +
                               formatViolation(violations.front()));
    }
  }
  return result;
}

}  // namespace irgraph
