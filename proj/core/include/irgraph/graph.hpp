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
// IrGraph: a typed, directed, attributed multigraph of IR nodes connected by
// Dataflow and Controlflow edges. Operand order is carried solely by the
// position attribute of each edge.

#ifndef IRGRAPH_GRAPH_HPP_
#define IRGRAPH_GRAPH_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "irgraph/attributes.hpp"
#include "irgraph/kinds.hpp"

namespace irgraph {

template <class Tag>
struct Id {
  std::uint32_t value = 0;

  constexpr explicit operator bool() const noexcept { return value != 0; }
  friend constexpr auto operator<=>(Id, Id) = default;
};

using NodeId = Id<struct NodeTag>;
using EdgeId = Id<struct EdgeTag>;

enum class ElementClass : std::uint8_t { kNode = 0, kEdge = 1 };

// A node or edge id. Ordered by numeric id first, nodes before edges on ties.
struct ElementRef {
  ElementClass cls = ElementClass::kNode;
  std::uint32_t id = 0;

  static constexpr ElementRef of(NodeId n) { return {ElementClass::kNode, n.value}; }
  static constexpr ElementRef of(EdgeId e) { return {ElementClass::kEdge, e.value}; }

  constexpr std::uint64_t key() const noexcept {
    return (std::uint64_t{id} << 1) | static_cast<std::uint64_t>(cls);
  }
  bool isNode() const noexcept { return cls == ElementClass::kNode; }
  NodeId node() const noexcept { return NodeId{id}; }
  EdgeId edge() const noexcept { return EdgeId{id}; }

  friend constexpr bool operator==(ElementRef a, ElementRef b) noexcept {
    return a.key() == b.key();
  }
  friend constexpr auto operator<=>(ElementRef a, ElementRef b) noexcept {
    return a.key() <=> b.key();
  }
};

// "n12" / "e7".
std::string toString(ElementRef ref);
std::string toString(NodeId id);
std::string toString(EdgeId id);

// Elements created, modified (attribute change, retype, endpoint or incidence
// change) or deleted by a sequence of mutations. The sets stay pairwise
// disjoint: an element created and then modified is only reported as created.
struct ApplyResult {
  std::set<ElementRef> created;
  std::set<ElementRef> modified;
  std::set<ElementRef> deleted;

  void noteCreated(ElementRef ref);
  void noteModified(ElementRef ref);
  void noteDeleted(ElementRef ref);
  void merge(const ApplyResult& other);

  bool touches(ElementRef ref) const;
  bool empty() const {
    return created.empty() && modified.empty() && deleted.empty();
  }
};

struct Edge {
  EdgeKind kind = EdgeKind::kDataflow;
  NodeId source;
  NodeId target;
  EdgeAttrs attrs;
};

class IrGraph {
 public:
  IrGraph() = default;
  IrGraph(const IrGraph& other);
  IrGraph& operator=(const IrGraph& other);
  IrGraph(IrGraph&&) noexcept = default;
  IrGraph& operator=(IrGraph&&) noexcept = default;

  // Mutation. Throws SchemaError, DanglingEndpoint, NotFound, SameNode.
  NodeId addNode(NodeKind kind, AttrMap attrs = {});
  EdgeId addEdge(EdgeKind kind, NodeId source, NodeId target,
                 EdgeAttrs attrs);
  // Restores an element with a caller-chosen id, which must exceed every id
  // issued so far. Used by the loader.
  void insertNode(NodeId id, NodeKind kind, AttrMap attrs);
  void insertEdge(EdgeId id, EdgeKind kind, NodeId source, NodeId target,
                  EdgeAttrs attrs);

  // Returns the ids of the incident edges removed along with the node.
  std::vector<EdgeId> deleteNode(NodeId id);
  void deleteEdge(EdgeId id);
  // Moves every edge endpoint equal to `from` over to `to`. Returns the
  // number of edges moved; a self-loop on `from` counts once.
  std::size_t relinkIncidentEdges(NodeId from, NodeId to);
  void setEdgeSource(EdgeId id, NodeId source);
  void setEdgeTarget(EdgeId id, NodeId target);
  void setEdgeAttrs(EdgeId id, EdgeAttrs attrs);
  void setAttr(NodeId id, std::string_view name, AttrValue value);

  // Element access. Throws NotFound for missing ids.
  bool contains(NodeId id) const noexcept;
  bool contains(EdgeId id) const noexcept;
  NodeKind kind(NodeId id) const;
  const AttrMap& attrs(NodeId id) const;
  // Throws SchemaError if `name` is outside the kind's schema.
  const AttrValue& attr(NodeId id, std::string_view name) const;
  std::int32_t intAttr(NodeId id, std::string_view name) const;
  bool boolAttr(NodeId id, std::string_view name) const;
  const std::string& textAttr(NodeId id, std::string_view name) const;
  Relation relationAttr(NodeId id, std::string_view name = "relation") const;
  const Edge& edge(EdgeId id) const;

  // Incidence queries; edge lists are in ascending id order.
  std::vector<EdgeId> edgesFrom(NodeId id,
                                std::optional<EdgeKind> kind = {}) const;
  std::vector<EdgeId> edgesTo(NodeId id,
                              std::optional<EdgeKind> kind = {}) const;
  std::size_t outDegree(NodeId id, std::optional<EdgeKind> kind = {}) const;
  std::size_t inDegree(NodeId id, std::optional<EdgeKind> kind = {}) const;
  std::size_t degree(NodeId id, std::optional<EdgeKind> kind = {}) const;
  // Dataflow out-edges with position >= 0, ascending by (position, id).
  std::vector<EdgeId> operandEdges(NodeId id) const;
  // The lowest-id Dataflow out-edge with position -1, if any.
  std::optional<EdgeId> containmentEdge(NodeId id) const;

  std::vector<NodeId> nodes() const;
  std::vector<EdgeId> edges() const;
  std::vector<NodeId> nodesOfKind(std::span<const NodeKind> kinds) const;
  std::vector<NodeId> nodesOfKind(NodeKind kind) const;
  std::vector<NodeId> nodesNotOfKind(std::span<const NodeKind> kinds) const;
  std::size_t nodeCount() const noexcept { return liveNodes_; }
  std::size_t edgeCount() const noexcept { return liveEdges_; }
  NodeId lastNodeId() const noexcept;
  EdgeId lastEdgeId() const noexcept;

  // Full scan of the edge store against the adjacency indices. Returns one
  // message per inconsistency; empty when the graph is sound.
  std::vector<std::string> audit() const;

  // While set, every mutation is recorded into `journal`.
  void setJournal(ApplyResult* journal) noexcept { journal_ = journal; }
  ApplyResult* journal() const noexcept { return journal_; }

 private:
  struct NodeSlot {
    NodeKind kind;
    AttrMap attrs;
    std::vector<EdgeId> out;  // sorted
    std::vector<EdgeId> in;   // sorted
  };

  NodeSlot& slot(NodeId id);
  const NodeSlot& slot(NodeId id) const;
  Edge& edgeSlot(EdgeId id);
  void link(EdgeId id, const Edge& e);
  void unlink(EdgeId id, const Edge& e);
  void placeNode(NodeId id, NodeKind kind, AttrMap attrs);
  void placeEdge(EdgeId id, EdgeKind kind, NodeId source, NodeId target,
                 EdgeAttrs attrs);
  void noteCreated(ElementRef r) { if (journal_) journal_->noteCreated(r); }
  void noteModified(ElementRef r) { if (journal_) journal_->noteModified(r); }
  void noteDeleted(ElementRef r) { if (journal_) journal_->noteDeleted(r); }

  // Indexed by id; slot 0 is never used.
  std::vector<std::optional<NodeSlot>> nodes_{std::nullopt};
  std::vector<std::optional<Edge>> edges_{std::nullopt};
  std::size_t liveNodes_ = 0;
  std::size_t liveEdges_ = 0;
  ApplyResult* journal_ = nullptr;
};

// Journals every mutation of `graph` into `result` for the scope's lifetime.
class JournalScope {
 public:
  JournalScope(IrGraph& graph, ApplyResult& result)
      : graph_(graph), previous_(graph.journal()) {
    graph_.setJournal(&result);
  }
  ~JournalScope() { graph_.setJournal(previous_); }
  JournalScope(const JournalScope&) = delete;
  JournalScope& operator=(const JournalScope&) = delete;

 private:
  IrGraph& graph_;
  ApplyResult* previous_;
};

// The block a node is contained in (target of its containment edge).
std::optional<NodeId> blockOf(const IrGraph& graph, NodeId node);
// Nodes whose containment edge targets `block`, ascending.
std::vector<NodeId> containedNodes(const IrGraph& graph, NodeId block);
// The single node of `kind`; absent if there are zero or several.
std::optional<NodeId> uniqueNodeOfKind(const IrGraph& graph, NodeKind kind);
// The Jmp/Cond/Return contained in `block`, if exactly one exists.
std::optional<NodeId> controlNodeOf(const IrGraph& graph, NodeId block);

}  // namespace irgraph

#endif  // IRGRAPH_GRAPH_HPP_
