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

#include "irgraph/rewrite.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "irgraph/error.hpp"

namespace irgraph {
namespace {

std::string describeBinding(const Binding& b) {
  struct Visitor {
    std::string operator()(NodeId n) const { return toString(n); }
    std::string operator()(EdgeId e) const { return toString(e); }
    std::string operator()(std::int32_t v) const { return std::to_string(v); }
    std::string operator()(const std::string& s) const { return '"' + s + '"'; }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
    std::string operator()(const std::vector<NodeId>& ns) const {
      std::string out = "[";
      for (std::size_t i = 0; i < ns.size(); ++i) {
        out += (i ? ", " : "") + toString(ns[i]);
      }
      return out + "]";
    }
    std::string operator()(const std::vector<EdgeId>& es) const {
      std::string out = "[";
      for (std::size_t i = 0; i < es.size(); ++i) {
        out += (i ? ", " : "") + toString(es[i]);
      }
      return out + "]";
    }
  };
  return std::visit(Visitor{}, b);
}

template <class T>
const T& getAs(const Match& m, std::string_view role) {
  const Binding& b = m.get(role);
  if (const T* v = std::get_if<T>(&b)) return *v;
  throw SchemaError("binding '" + std::string(role) + "' has another type");
}

// Exact-duplicate edges incident to `node` collapse onto the lowest id.
void collapseParallelEdges(IrGraph& graph, NodeId node) {
  std::vector<EdgeId> incident = graph.edgesFrom(node);
  const auto in = graph.edgesTo(node);
  incident.insert(incident.end(), in.begin(), in.end());
  std::sort(incident.begin(), incident.end());
  incident.erase(std::unique(incident.begin(), incident.end()),
                 incident.end());

  using Signature = std::tuple<EdgeKind, std::uint32_t, std::uint32_t,
                               std::int32_t, int>;
  std::set<Signature> seen;
  for (EdgeId id : incident) {
    const Edge& e = graph.edge(id);
    const int branch = e.attrs.branch ? (*e.attrs.branch ? 1 : 0) : -1;
    Signature sig{e.kind, e.source.value, e.target.value, e.attrs.position,
                  branch};
    if (!seen.insert(sig).second) graph.deleteEdge(id);
  }
}

}  // namespace

Match& Match::bind(std::string role, Binding value) {
  if (const auto* n = std::get_if<NodeId>(&value)) {
    addToFootprint(ElementRef::of(*n));
  } else if (const auto* e = std::get_if<EdgeId>(&value)) {
    addToFootprint(ElementRef::of(*e));
  } else if (const auto* ns = std::get_if<std::vector<NodeId>>(&value)) {
    for (NodeId n : *ns) addToFootprint(ElementRef::of(n));
  } else if (const auto* es = std::get_if<std::vector<EdgeId>>(&value)) {
    for (EdgeId e : *es) addToFootprint(ElementRef::of(e));
  }
  bindings_.insert_or_assign(std::move(role), std::move(value));
  return *this;
}

Match& Match::touch(NodeId id) {
  addToFootprint(ElementRef::of(id));
  return *this;
}

Match& Match::touch(EdgeId id) {
  addToFootprint(ElementRef::of(id));
  return *this;
}

Match& Match::touch(std::span<const EdgeId> ids) {
  for (EdgeId e : ids) addToFootprint(ElementRef::of(e));
  return *this;
}

void Match::addToFootprint(ElementRef ref) {
  auto it = std::lower_bound(footprint_.begin(), footprint_.end(), ref);
  if (it == footprint_.end() || *it != ref) footprint_.insert(it, ref);
}

const Binding& Match::get(std::string_view role) const {
  auto it = bindings_.find(role);
  if (it == bindings_.end()) {
    throw NotFound("match has no binding '" + std::string(role) + "'");
  }
  return it->second;
}

NodeId Match::node(std::string_view role) const {
  return getAs<NodeId>(*this, role);
}

EdgeId Match::edge(std::string_view role) const {
  return getAs<EdgeId>(*this, role);
}

std::int32_t Match::integer(std::string_view role) const {
  return getAs<std::int32_t>(*this, role);
}

const std::string& Match::text(std::string_view role) const {
  return getAs<std::string>(*this, role);
}

const std::vector<EdgeId>& Match::edgeList(std::string_view role) const {
  return getAs<std::vector<EdgeId>>(*this, role);
}

std::string Match::describe() const {
  std::string out = "{";
  bool first = true;
  for (const auto& [role, value] : bindings_) {
    out += (first ? "" : ", ") + role + ": " + describeBinding(value);
    first = false;
  }
  return out + "}";
}

void PassReport::absorb(const PassReport& other) {
  matchesFound += other.matchesFound;
  applied += other.applied;
  skipped += other.skipped;
  changes.merge(other.changes);
  diagnostics.insert(diagnostics.end(), other.diagnostics.begin(),
                     other.diagnostics.end());
}

std::string summarize(const PassReport& report) {
  std::ostringstream out;
  out << report.rule << ": matches=" << report.matchesFound
      << " applied=" << report.applied << " skipped=" << report.skipped
      << " created=" << report.changes.created.size()
      << " modified=" << report.changes.modified.size()
      << " deleted=" << report.changes.deleted.size();
  return out.str();
}

PassReport matchReplace(IrGraph& graph, const RewriteRule& rule,
                        const ApplyObserver& observer) {
  PassReport report;
  report.rule = rule.name;
  std::vector<Match> matches = rule.matcher(graph, report.diagnostics);
  report.matchesFound = matches.size();

  std::stable_sort(matches.begin(), matches.end(),
                   [](const Match& a, const Match& b) {
                     return std::lexicographical_compare(
                         a.footprint().begin(), a.footprint().end(),
                         b.footprint().begin(), b.footprint().end());
                   });

  for (const Match& match : matches) {
    const bool overlaps = std::any_of(
        match.footprint().begin(), match.footprint().end(),
        [&](ElementRef ref) { return report.changes.touches(ref); });
    if (overlaps) {
      ++report.skipped;
      continue;
    }
    ApplyResult result;
    {
      JournalScope scope(graph, result);
      try {
        rule.applier(graph, match);
      } catch (const std::exception& ex) {
        report.changes.merge(result);
        throw ApplierError(rule.name + " failed on match " + match.describe() +
                           ": " + ex.what());
      }
    }
    ++report.applied;
    if (observer) observer(match, result);
    report.changes.merge(result);
  }
  return report;
}

NodeId applyTemplateRetype(IrGraph& graph, NodeId old, NodeKind newKind,
                           AttrMap attrs, bool copyShared) {
  AttrMap finalAttrs;
  if (copyShared) {
    for (const auto& [name, value] : graph.attrs(old)) {
      if (attrTypeIn(newKind, name)) finalAttrs.insert_or_assign(name, value);
    }
  }
  for (auto& [name, value] : attrs) {
    finalAttrs.insert_or_assign(name, std::move(value));
  }
  const NodeId fresh = graph.addNode(newKind, std::move(finalAttrs));
  graph.relinkIncidentEdges(old, fresh);
  graph.deleteNode(old);
  return fresh;
}

PassReport deleteSet(IrGraph& graph, std::span<const ElementRef> elements,
                     std::string_view name) {
  PassReport report;
  report.rule = std::string(name);
  std::vector<ElementRef> sorted(elements.begin(), elements.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  report.matchesFound = sorted.size();

  JournalScope scope(graph, report.changes);
  for (ElementRef ref : sorted) {
    const bool present =
        ref.isNode() ? graph.contains(ref.node()) : graph.contains(ref.edge());
    if (!present) {
      ++report.skipped;
      report.diagnostics.push_back(toString(ref) + " already absent");
      continue;
    }
    if (ref.isNode()) {
      graph.deleteNode(ref.node());
    } else {
      graph.deleteEdge(ref.edge());
    }
    ++report.applied;
  }
  return report;
}

PassReport mergeVertices(IrGraph& graph, const DuplicatesMap& duplicates,
                         std::string_view name) {
  for (const auto& [key, dups] : duplicates) {
    if (dups.contains(key)) {
      throw KeyIsOwnDuplicate(toString(key) +
                              " is listed among its own duplicates");
    }
  }
  PassReport report;
  report.rule = std::string(name);
  report.matchesFound = duplicates.size();

  JournalScope scope(graph, report.changes);
  for (const auto& [key, dups] : duplicates) {
    if (!graph.contains(key)) {
      ++report.skipped;
      report.diagnostics.push_back(toString(key) + " was merged earlier");
      continue;
    }
    for (NodeId dup : dups) {
      if (!graph.contains(dup)) continue;
      graph.relinkIncidentEdges(dup, key);
      graph.deleteNode(dup);
    }
    collapseParallelEdges(graph, key);
    ++report.applied;
  }
  return report;
}

IterationOutcome iteratively(IrGraph& graph, const PassBody& body,
                             std::size_t cap) {
  IterationOutcome outcome;
  while (true) {
    if (outcome.iterations == cap) {
      throw IterationLimitExceeded("no fixpoint after " + std::to_string(cap) +
                                   " iterations");
    }
    ++outcome.iterations;
    std::size_t applied = 0;
    for (const PassReport& r : body(graph)) applied += r.applied;
    outcome.totalApplied += applied;
    if (applied == 0) return outcome;
  }
}

IterationOutcome iteratively(IrGraph& graph, const RewriteRule& rule,
                             std::size_t cap) {
  return iteratively(
      graph,
      [&](IrGraph& g) { return std::vector<PassReport>{matchReplace(g, rule)}; },
      cap);
}

}  // namespace irgraph
