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

#include "irgraph/graph.hpp"

#include <algorithm>

#include "irgraph/error.hpp"

namespace irgraph {
namespace {

void insertSorted(std::vector<EdgeId>& list, EdgeId id) {
  list.insert(std::upper_bound(list.begin(), list.end(), id), id);
}

void eraseSorted(std::vector<EdgeId>& list, EdgeId id) {
  auto it = std::lower_bound(list.begin(), list.end(), id);
  if (it != list.end() && *it == id) list.erase(it);
}

void validateEdgeAttrs(EdgeKind kind, const EdgeAttrs& attrs) {
  if (kind == EdgeKind::kDataflow) {
    if (attrs.position < -1) {
      throw SchemaError("Dataflow position must be >= -1, got " +
                        std::to_string(attrs.position));
    }
    if (attrs.branch) {
      throw SchemaError("branch is only defined on Controlflow edges");
    }
  } else if (attrs.position < 0) {
    throw SchemaError("Controlflow position must be >= 0, got " +
                      std::to_string(attrs.position));
  }
}

}  // namespace

std::string toString(ElementRef ref) {
  return (ref.isNode() ? "n" : "e") + std::to_string(ref.id);
}
std::string toString(NodeId id) { return toString(ElementRef::of(id)); }
std::string toString(EdgeId id) { return toString(ElementRef::of(id)); }

void ApplyResult::noteCreated(ElementRef ref) { created.insert(ref); }

void ApplyResult::noteModified(ElementRef ref) {
  if (created.contains(ref) || deleted.contains(ref)) return;
  modified.insert(ref);
}

void ApplyResult::noteDeleted(ElementRef ref) {
  created.erase(ref);
  modified.erase(ref);
  deleted.insert(ref);
}

void ApplyResult::merge(const ApplyResult& other) {
  for (ElementRef r : other.created) noteCreated(r);
  for (ElementRef r : other.modified) noteModified(r);
  for (ElementRef r : other.deleted) noteDeleted(r);
}

bool ApplyResult::touches(ElementRef ref) const {
  return created.contains(ref) || modified.contains(ref) ||
         deleted.contains(ref);
}

IrGraph::IrGraph(const IrGraph& other)
    : nodes_(other.nodes_),
      edges_(other.edges_),
      liveNodes_(other.liveNodes_),
      liveEdges_(other.liveEdges_) {}

IrGraph& IrGraph::operator=(const IrGraph& other) {
  if (this != &other) {
    nodes_ = other.nodes_;
    edges_ = other.edges_;
    liveNodes_ = other.liveNodes_;
    liveEdges_ = other.liveEdges_;
  }
  return *this;
}

IrGraph::NodeSlot& IrGraph::slot(NodeId id) {
  if (!contains(id)) throw NotFound("node " + toString(id) + " does not exist");
  return *nodes_[id.value];
}

const IrGraph::NodeSlot& IrGraph::slot(NodeId id) const {
  if (!contains(id)) throw NotFound("node " + toString(id) + " does not exist");
  return *nodes_[id.value];
}

Edge& IrGraph::edgeSlot(EdgeId id) {
  if (!contains(id)) throw NotFound("edge " + toString(id) + " does not exist");
  return *edges_[id.value];
}

bool IrGraph::contains(NodeId id) const noexcept {
  return id.value != 0 && id.value < nodes_.size() && nodes_[id.value];
}

bool IrGraph::contains(EdgeId id) const noexcept {
  return id.value != 0 && id.value < edges_.size() && edges_[id.value];
}

NodeId IrGraph::lastNodeId() const noexcept {
  return NodeId{static_cast<std::uint32_t>(nodes_.size() - 1)};
}

EdgeId IrGraph::lastEdgeId() const noexcept {
  return EdgeId{static_cast<std::uint32_t>(edges_.size() - 1)};
}

void IrGraph::placeNode(NodeId id, NodeKind kind, AttrMap attrs) {
  attrs = conformAttrs(kind, std::move(attrs));
  nodes_.resize(id.value + 1);
  nodes_[id.value] = NodeSlot{kind, std::move(attrs), {}, {}};
  ++liveNodes_;
  noteCreated(ElementRef::of(id));
}

NodeId IrGraph::addNode(NodeKind kind, AttrMap attrs) {
  const NodeId id{static_cast<std::uint32_t>(nodes_.size())};
  placeNode(id, kind, std::move(attrs));
  return id;
}

void IrGraph::insertNode(NodeId id, NodeKind kind, AttrMap attrs) {
  if (id.value < nodes_.size()) {
    throw SchemaError("node id " + std::to_string(id.value) +
                      " is not fresh");
  }
  placeNode(id, kind, std::move(attrs));
}

void IrGraph::link(EdgeId id, const Edge& e) {
  insertSorted(nodes_[e.source.value]->out, id);
  insertSorted(nodes_[e.target.value]->in, id);
}

void IrGraph::unlink(EdgeId id, const Edge& e) {
  eraseSorted(nodes_[e.source.value]->out, id);
  eraseSorted(nodes_[e.target.value]->in, id);
}

void IrGraph::placeEdge(EdgeId id, EdgeKind kind, NodeId source,
                        NodeId target, EdgeAttrs attrs) {
  if (!contains(source) || !contains(target)) {
    throw DanglingEndpoint("edge " + toString(source) + " -> " +
                           toString(target) + " references a missing node");
  }
  validateEdgeAttrs(kind, attrs);
  edges_.resize(id.value + 1);
  edges_[id.value] = Edge{kind, source, target, attrs};
  link(id, *edges_[id.value]);
  ++liveEdges_;
  noteCreated(ElementRef::of(id));
  noteModified(ElementRef::of(source));
  noteModified(ElementRef::of(target));
}

EdgeId IrGraph::addEdge(EdgeKind kind, NodeId source, NodeId target,
                        EdgeAttrs attrs) {
  const EdgeId id{static_cast<std::uint32_t>(edges_.size())};
  placeEdge(id, kind, source, target, attrs);
  return id;
}

void IrGraph::insertEdge(EdgeId id, EdgeKind kind, NodeId source,
                         NodeId target, EdgeAttrs attrs) {
  if (id.value < edges_.size()) {
    throw SchemaError("edge id " + std::to_string(id.value) +
                      " is not fresh");
  }
  placeEdge(id, kind, source, target, attrs);
}

void IrGraph::deleteEdge(EdgeId id) {
  const Edge e = edgeSlot(id);
  unlink(id, e);
  edges_[id.value].reset();
  --liveEdges_;
  noteDeleted(ElementRef::of(id));
  noteModified(ElementRef::of(e.source));
  noteModified(ElementRef::of(e.target));
}

std::vector<EdgeId> IrGraph::deleteNode(NodeId id) {
  const NodeSlot& s = slot(id);
  std::vector<EdgeId> incident;
  std::set_union(s.out.begin(), s.out.end(), s.in.begin(), s.in.end(),
                 std::back_inserter(incident));
  for (EdgeId e : incident) deleteEdge(e);
  nodes_[id.value].reset();
  --liveNodes_;
  noteDeleted(ElementRef::of(id));
  return incident;
}

std::size_t IrGraph::relinkIncidentEdges(NodeId from, NodeId to) {
  if (from == to) {
    throw SameNode("cannot relink " + toString(from) + " onto itself");
  }
  const NodeSlot& src = slot(from);
  slot(to);
  std::vector<EdgeId> incident;
  std::set_union(src.out.begin(), src.out.end(), src.in.begin(),
                 src.in.end(), std::back_inserter(incident));
  for (EdgeId id : incident) {
    Edge& e = *edges_[id.value];
    unlink(id, e);
    if (e.source == from) e.source = to;
    if (e.target == from) e.target = to;
    link(id, e);
    noteModified(ElementRef::of(id));
  }
  if (!incident.empty()) {
    noteModified(ElementRef::of(from));
    noteModified(ElementRef::of(to));
  }
  return incident.size();
}

void IrGraph::setEdgeSource(EdgeId id, NodeId source) {
  Edge& e = edgeSlot(id);
  if (!contains(source)) {
    throw DanglingEndpoint("edge " + toString(id) + " source " +
                           toString(source) + " does not exist");
  }
  const NodeId old = e.source;
  unlink(id, e);
  e.source = source;
  link(id, e);
  noteModified(ElementRef::of(id));
  noteModified(ElementRef::of(old));
  noteModified(ElementRef::of(source));
}

void IrGraph::setEdgeTarget(EdgeId id, NodeId target) {
  Edge& e = edgeSlot(id);
  if (!contains(target)) {
    throw DanglingEndpoint("edge " + toString(id) + " target " +
                           toString(target) + " does not exist");
  }
  const NodeId old = e.target;
  unlink(id, e);
  e.target = target;
  link(id, e);
  noteModified(ElementRef::of(id));
  noteModified(ElementRef::of(old));
  noteModified(ElementRef::of(target));
}

void IrGraph::setEdgeAttrs(EdgeId id, EdgeAttrs attrs) {
  Edge& e = edgeSlot(id);
  validateEdgeAttrs(e.kind, attrs);
  e.attrs = attrs;
  noteModified(ElementRef::of(id));
}

void IrGraph::setAttr(NodeId id, std::string_view name, AttrValue value) {
  NodeSlot& s = slot(id);
  const auto type = attrTypeIn(s.kind, name);
  if (!type) {
    throw SchemaError("attribute '" + std::string(name) +
                      "' is not defined for " + std::string(kindName(s.kind)));
  }
  if (*type != attrTypeOf(value)) {
    throw SchemaError("attribute '" + std::string(name) + "' must be " +
                      std::string(attrTypeName(*type)));
  }
  AttrMap updated = s.attrs;
  updated.insert_or_assign(std::string(name), std::move(value));
  s.attrs = conformAttrs(s.kind, std::move(updated));
  noteModified(ElementRef::of(id));
}

NodeKind IrGraph::kind(NodeId id) const { return slot(id).kind; }

const AttrMap& IrGraph::attrs(NodeId id) const { return slot(id).attrs; }

const AttrValue& IrGraph::attr(NodeId id, std::string_view name) const {
  const NodeSlot& s = slot(id);
  auto it = s.attrs.find(name);
  if (it == s.attrs.end()) {
    throw SchemaError("attribute '" + std::string(name) +
                      "' is not defined for " + std::string(kindName(s.kind)));
  }
  return it->second;
}

std::int32_t IrGraph::intAttr(NodeId id, std::string_view name) const {
  return std::get<std::int32_t>(attr(id, name));
}

bool IrGraph::boolAttr(NodeId id, std::string_view name) const {
  return std::get<bool>(attr(id, name));
}

const std::string& IrGraph::textAttr(NodeId id, std::string_view name) const {
  return std::get<std::string>(attr(id, name));
}

Relation IrGraph::relationAttr(NodeId id, std::string_view name) const {
  return std::get<Relation>(attr(id, name));
}

const Edge& IrGraph::edge(EdgeId id) const {
  if (!contains(id)) throw NotFound("edge " + toString(id) + " does not exist");
  return *edges_[id.value];
}

std::vector<EdgeId> IrGraph::edgesFrom(NodeId id,
                                       std::optional<EdgeKind> kind) const {
  const NodeSlot& s = slot(id);
  if (!kind) return s.out;
  std::vector<EdgeId> result;
  for (EdgeId e : s.out) {
    if (edges_[e.value]->kind == *kind) result.push_back(e);
  }
  return result;
}

std::vector<EdgeId> IrGraph::edgesTo(NodeId id,
                                     std::optional<EdgeKind> kind) const {
  const NodeSlot& s = slot(id);
  if (!kind) return s.in;
  std::vector<EdgeId> result;
  for (EdgeId e : s.in) {
    if (edges_[e.value]->kind == *kind) result.push_back(e);
  }
  return result;
}

std::size_t IrGraph::outDegree(NodeId id, std::optional<EdgeKind> kind) const {
  const NodeSlot& s = slot(id);
  if (!kind) return s.out.size();
  return static_cast<std::size_t>(
      std::count_if(s.out.begin(), s.out.end(), [&](EdgeId e) {
        return edges_[e.value]->kind == *kind;
      }));
}

std::size_t IrGraph::inDegree(NodeId id, std::optional<EdgeKind> kind) const {
  const NodeSlot& s = slot(id);
  if (!kind) return s.in.size();
  return static_cast<std::size_t>(
      std::count_if(s.in.begin(), s.in.end(), [&](EdgeId e) {
        return edges_[e.value]->kind == *kind;
      }));
}

std::size_t IrGraph::degree(NodeId id, std::optional<EdgeKind> kind) const {
  return outDegree(id, kind) + inDegree(id, kind);
}

std::vector<EdgeId> IrGraph::operandEdges(NodeId id) const {
  std::vector<EdgeId> result;
  for (EdgeId e : slot(id).out) {
    const Edge& edge = *edges_[e.value];
    if (edge.kind == EdgeKind::kDataflow && edge.attrs.position >= 0) {
      result.push_back(e);
    }
  }
  std::stable_sort(result.begin(), result.end(), [&](EdgeId a, EdgeId b) {
    return edges_[a.value]->attrs.position < edges_[b.value]->attrs.position;
  });
  return result;
}

std::optional<EdgeId> IrGraph::containmentEdge(NodeId id) const {
  for (EdgeId e : slot(id).out) {
    const Edge& edge = *edges_[e.value];
    if (edge.kind == EdgeKind::kDataflow && edge.attrs.position == -1) {
      return e;
    }
  }
  return std::nullopt;
}

std::vector<NodeId> IrGraph::nodes() const {
  std::vector<NodeId> result;
  result.reserve(liveNodes_);
  for (std::uint32_t i = 1; i < nodes_.size(); ++i) {
    if (nodes_[i]) result.push_back(NodeId{i});
  }
  return result;
}

std::vector<EdgeId> IrGraph::edges() const {
  std::vector<EdgeId> result;
  result.reserve(liveEdges_);
  for (std::uint32_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i]) result.push_back(EdgeId{i});
  }
  return result;
}

std::vector<NodeId> IrGraph::nodesOfKind(
    std::span<const NodeKind> kinds) const {
  std::vector<NodeId> result;
  for (std::uint32_t i = 1; i < nodes_.size(); ++i) {
    if (nodes_[i] && std::find(kinds.begin(), kinds.end(), nodes_[i]->kind) !=
                         kinds.end()) {
      result.push_back(NodeId{i});
    }
  }
  return result;
}

std::vector<NodeId> IrGraph::nodesOfKind(NodeKind kind) const {
  return nodesOfKind(std::span<const NodeKind>(&kind, 1));
}

std::vector<NodeId> IrGraph::nodesNotOfKind(
    std::span<const NodeKind> kinds) const {
  std::vector<NodeId> result;
  for (std::uint32_t i = 1; i < nodes_.size(); ++i) {
    if (nodes_[i] && std::find(kinds.begin(), kinds.end(), nodes_[i]->kind) ==
                         kinds.end()) {
      result.push_back(NodeId{i});
    }
  }
  return result;
}

std::vector<std::string> IrGraph::audit() const {
  std::vector<std::string> problems;
  std::size_t nodeCount = 0;
  std::size_t edgeCount = 0;
  std::size_t outEntries = 0;
  std::size_t inEntries = 0;
  for (std::uint32_t i = 1; i < edges_.size(); ++i) {
    if (!edges_[i]) continue;
    ++edgeCount;
    const EdgeId id{i};
    const Edge& e = *edges_[i];
    if (!contains(e.source) || !contains(e.target)) {
      problems.push_back("edge " + toString(id) + " has a dangling endpoint");
      continue;
    }
    const auto& out = nodes_[e.source.value]->out;
    const auto& in = nodes_[e.target.value]->in;
    if (!std::binary_search(out.begin(), out.end(), id)) {
      problems.push_back("edge " + toString(id) +
                         " missing from out-index of " + toString(e.source));
    }
    if (!std::binary_search(in.begin(), in.end(), id)) {
      problems.push_back("edge " + toString(id) +
                         " missing from in-index of " + toString(e.target));
    }
  }
  for (std::uint32_t i = 1; i < nodes_.size(); ++i) {
    if (!nodes_[i]) continue;
    ++nodeCount;
    const NodeId id{i};
    const NodeSlot& s = *nodes_[i];
    if (!std::is_sorted(s.out.begin(), s.out.end()) ||
        !std::is_sorted(s.in.begin(), s.in.end())) {
      problems.push_back("adjacency of " + toString(id) + " is unsorted");
    }
    for (EdgeId e : s.out) {
      ++outEntries;
      if (!contains(e) || edges_[e.value]->source != id) {
        problems.push_back("out-index of " + toString(id) +
                           " lists foreign edge " + toString(e));
      }
    }
    for (EdgeId e : s.in) {
      ++inEntries;
      if (!contains(e) || edges_[e.value]->target != id) {
        problems.push_back("in-index of " + toString(id) +
                           " lists foreign edge " + toString(e));
      }
    }
  }
  if (nodeCount != liveNodes_ || edgeCount != liveEdges_) {
    problems.push_back("live element counters disagree with the store");
  }
  if (outEntries != edgeCount || inEntries != edgeCount) {
    problems.push_back("adjacency entry count differs from edge count");
  }
  return problems;
}

std::optional<NodeId> blockOf(const IrGraph& graph, NodeId node) {
  for (EdgeId e : graph.edgesFrom(node, EdgeKind::kDataflow)) {
    const Edge& edge = graph.edge(e);
    if (edge.attrs.position == -1 && isBlock(graph.kind(edge.target))) {
      return edge.target;
    }
  }
  return std::nullopt;
}

std::vector<NodeId> containedNodes(const IrGraph& graph, NodeId block) {
  std::vector<NodeId> result;
  for (EdgeId e : graph.edgesTo(block, EdgeKind::kDataflow)) {
    const Edge& edge = graph.edge(e);
    if (edge.attrs.position == -1) result.push_back(edge.source);
  }
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

std::optional<NodeId> uniqueNodeOfKind(const IrGraph& graph, NodeKind kind) {
  const auto found = graph.nodesOfKind(kind);
  if (found.size() != 1) return std::nullopt;
  return found.front();
}

std::optional<NodeId> controlNodeOf(const IrGraph& graph, NodeId block) {
  std::optional<NodeId> result;
  for (NodeId n : containedNodes(graph, block)) {
    if (!isControlNode(graph.kind(n))) continue;
    if (result) return std::nullopt;
    result = n;
  }
  return result;
}

}  // namespace irgraph
