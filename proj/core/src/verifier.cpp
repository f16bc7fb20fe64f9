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

#include "irgraph/verifier.hpp"

#include <map>
#include <set>

namespace irgraph {
namespace {

void checkUnique(const IrGraph& g, int constraint, NodeKind node,
                 NodeKind block, std::vector<Violation>& out) {
  for (NodeKind kind : {node, block}) {
    const auto found = g.nodesOfKind(kind);
    if (found.size() == 1) continue;
    Violation v{constraint, {}, ""};
    for (NodeId n : found) v.elements.push_back(ElementRef::of(n));
    v.message = "expected exactly one " + std::string(kindName(kind)) +
                ", found " + std::to_string(found.size());
    out.push_back(std::move(v));
  }
}

void checkPhi(const IrGraph& g, NodeId phi, NodeId block,
              std::vector<Violation>& out) {
  const auto blockPreds = g.edgesFrom(block, EdgeKind::kControlflow);
  const auto phiEdges = g.edgesFrom(phi, EdgeKind::kDataflow);
  const std::size_t preds = blockPreds.size();
  const std::vector<ElementRef> where{ElementRef::of(phi),
                                      ElementRef::of(block)};
  if (phiEdges.size() != preds + 1) {
    out.push_back({6, where,
                   "6.1: Phi has " + std::to_string(phiEdges.size()) +
                       " Dataflow edges, its block has " +
                       std::to_string(preds) + " predecessors"});
  }
  for (std::size_t p = 0; p < preds; ++p) {
    const auto pos = static_cast<std::int32_t>(p);
    std::size_t onPhi = 0;
    std::size_t onBlock = 0;
    for (EdgeId e : phiEdges) onPhi += g.edge(e).attrs.position == pos;
    for (EdgeId e : blockPreds) onBlock += g.edge(e).attrs.position == pos;
    if (onPhi != 1 || onBlock != 1) {
      out.push_back({6, where,
                     "6.2: position " + std::to_string(p) + " has " +
                         std::to_string(onPhi) + " Phi operand(s) and " +
                         std::to_string(onBlock) + " predecessor edge(s)"});
    }
  }
}

bool containedIn(const IrGraph& g, NodeId n, NodeId block) {
  for (EdgeId e : g.edgesFrom(n, EdgeKind::kDataflow)) {
    const Edge& edge = g.edge(e);
    if (edge.attrs.position == -1 && edge.target == block) return true;
  }
  return false;
}

}  // namespace

std::vector<Violation> verify(const IrGraph& g, bool strict) {
  std::vector<Violation> out;

  checkUnique(g, 1, NodeKind::kStart, NodeKind::kStartBlock, out);
  checkUnique(g, 2, NodeKind::kEnd, NodeKind::kEndBlock, out);

  for (EdgeId e : g.edges()) {
    const Edge& edge = g.edge(e);
    if (edge.kind == EdgeKind::kDataflow && isBlock(g.kind(edge.target)) &&
        edge.attrs.position != -1) {
      out.push_back({3, {ElementRef::of(e)},
                     "Dataflow edge into a block has position " +
                         std::to_string(edge.attrs.position)});
    }
  }

  for (NodeId n : g.nodes()) {
    if (isBlock(g.kind(n))) continue;
    std::size_t containers = 0;
    for (EdgeId e : g.edgesFrom(n, EdgeKind::kDataflow)) {
      const Edge& edge = g.edge(e);
      containers += edge.attrs.position == -1 && isBlock(g.kind(edge.target));
    }
    if (containers != 1) {
      out.push_back({4, {ElementRef::of(n)},
                     std::string(kindName(g.kind(n))) + " is contained in " +
                         std::to_string(containers) + " blocks"});
    }
  }

  if (const auto start = uniqueNodeOfKind(g, NodeKind::kStartBlock)) {
    std::vector<NodeKind> kinds{NodeKind::kConst};
    if (strict) kinds.push_back(NodeKind::kSymConst);
    for (NodeId c : g.nodesOfKind(kinds)) {
      if (!containedIn(g, c, *start)) {
        out.push_back({5, {ElementRef::of(c)},
                       std::string(kindName(g.kind(c))) +
                           " is not contained in the StartBlock"});
      }
    }
  }

  for (NodeId phi : g.nodesOfKind(NodeKind::kPhi)) {
    for (EdgeId e : g.edgesFrom(phi, EdgeKind::kDataflow)) {
      const Edge& edge = g.edge(e);
      if (edge.attrs.position == -1 && isBlock(g.kind(edge.target))) {
        checkPhi(g, phi, edge.target, out);
      }
    }
  }

  for (NodeId n : g.nodes()) {
    const NodeKind kind = g.kind(n);
    if (isBlock(kind) && kind != NodeKind::kEndBlock && g.inDegree(n) == 0) {
      out.push_back({7, {ElementRef::of(n)},
                     std::string(kindName(kind)) + " is empty"});
    }
  }

  for (NodeId n : g.nodes()) {
    if (g.degree(n) == 0) {
      out.push_back({8, {ElementRef::of(n)},
                     std::string(kindName(g.kind(n))) + " is isolated"});
    }
  }

  if (strict) {
    for (NodeId n : g.nodes()) {
      if (!isCondKind(g.kind(n))) continue;
      std::size_t onTrue = 0;
      std::size_t onFalse = 0;
      std::size_t other = 0;
      for (EdgeId e : g.edgesTo(n, EdgeKind::kControlflow)) {
        const auto branch = g.edge(e).attrs.branch;
        if (!branch) {
          ++other;
        } else if (*branch) {
          ++onTrue;
        } else {
          ++onFalse;
        }
      }
      if (onTrue != 1 || onFalse != 1 || other != 0) {
        out.push_back({9, {ElementRef::of(n)},
                       "Cond needs one branch=true and one branch=false "
                       "predecessor edge"});
      }
    }
    for (EdgeId e : g.edges()) {
      const Edge& edge = g.edge(e);
      if (edge.attrs.branch && !isCondKind(g.kind(edge.target))) {
        out.push_back({9, {ElementRef::of(e)},
                       "branch attribute on an edge not targeting a Cond"});
      }
    }
  }
  return out;
}

bool checkValidity(const IrGraph& graph) { return verify(graph).empty(); }

std::string formatViolation(const Violation& v) {
  std::string out = "C" + std::to_string(v.constraint) + ": " + v.message + " [";
  for (std::size_t i = 0; i < v.elements.size(); ++i) {
    out += (i ? ", " : "") + toString(v.elements[i]);
  }
  return out + "]";
}

}  // namespace irgraph
