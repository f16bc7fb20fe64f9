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
// In-place rewrite operations over an IrGraph.
//
//   matchReplace   compute every match up front, then apply each one in a
//                  deterministic order, skipping matches whose footprint
//                  intersects anything an earlier application touched
//   deleteSet      delete a set of elements, tolerating missing ones
//   mergeVertices  collapse duplicate vertices into a canonical key vertex
//   iteratively    re-run a body until it applies nothing

#ifndef IRGRAPH_REWRITE_HPP_
#define IRGRAPH_REWRITE_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "irgraph/graph.hpp"

namespace irgraph {

using Binding = std::variant<NodeId, EdgeId, std::int32_t, std::string, bool,
                             std::vector<NodeId>, std::vector<EdgeId>>;

// Named bindings plus the set of elements the match depends on. Binding a
// node or edge (or a list of them) adds it to the footprint; touch() adds
// elements that were inspected but not bound.
class Match {
 public:
  Match& bind(std::string role, Binding value);
  Match& touch(NodeId id);
  Match& touch(EdgeId id);
  Match& touch(std::span<const EdgeId> ids);

  const Binding& get(std::string_view role) const;
  NodeId node(std::string_view role) const;
  EdgeId edge(std::string_view role) const;
  std::int32_t integer(std::string_view role) const;
  const std::string& text(std::string_view role) const;
  const std::vector<EdgeId>& edgeList(std::string_view role) const;
  bool has(std::string_view role) const { return bindings_.contains(role); }

  // Sorted ascending, no duplicates.
  const std::vector<ElementRef>& footprint() const { return footprint_; }
  const std::map<std::string, Binding, std::less<>>& bindings() const {
    return bindings_;
  }
  std::string describe() const;

 private:
  void addToFootprint(ElementRef ref);

  std::map<std::string, Binding, std::less<>> bindings_;
  std::vector<ElementRef> footprint_;
};

using Diagnostics = std::vector<std::string>;

// The matcher runs once per pass against the unmodified graph and must not
// mutate it. Every mutation the applier performs is journaled by the engine,
// so the applier does not report its own changes.
struct RewriteRule {
  std::string name;
  std::function<std::vector<Match>(const IrGraph&, Diagnostics&)> matcher;
  std::function<void(IrGraph&, const Match&)> applier;
};

struct PassReport {
  std::string rule;
  std::size_t matchesFound = 0;
  std::size_t applied = 0;
  std::size_t skipped = 0;
  ApplyResult changes;
  Diagnostics diagnostics;

  // Accumulates another report of the same rule.
  void absorb(const PassReport& other);
};

std::string summarize(const PassReport& report);

using ApplyObserver = std::function<void(const Match&, const ApplyResult&)>;

// Throws ApplierError if an applier fails; the graph keeps every change made
// before the failure.
PassReport matchReplace(IrGraph& graph, const RewriteRule& rule,
                        const ApplyObserver& observer = {});

// Replaces `old` with a fresh node of `newKind`. With `copyShared`, every
// attribute defined for both kinds is copied first; `attrs` then overrides.
// All incident edges move to the new node and `old` is deleted.
NodeId applyTemplateRetype(IrGraph& graph, NodeId old, NodeKind newKind,
                           AttrMap attrs, bool copyShared);

PassReport deleteSet(IrGraph& graph, std::span<const ElementRef> elements,
                     std::string_view name = "delete");

using DuplicatesMap = std::map<NodeId, std::set<NodeId>>;

// Entries run in ascending key order. An entry whose key is already gone is
// skipped. Each duplicate's edges move to the key and the duplicate is
// deleted; afterwards parallel edges at the key that are identical in kind,
// endpoints and attributes collapse onto the lowest edge id.
// Throws KeyIsOwnDuplicate before touching the graph.
PassReport mergeVertices(IrGraph& graph, const DuplicatesMap& duplicates,
                         std::string_view name = "merge-vertices");

inline constexpr std::size_t kDefaultIterationCap = 10'000;

struct IterationOutcome {
  std::size_t iterations = 0;
  std::size_t totalApplied = 0;
};

using PassBody = std::function<std::vector<PassReport>(IrGraph&)>;

// Invokes `body` until one invocation applies nothing. Throws
// IterationLimitExceeded if invocation number `cap` still applied something.
IterationOutcome iteratively(IrGraph& graph, const PassBody& body,
                             std::size_t cap = kDefaultIterationCap);
IterationOutcome iteratively(IrGraph& graph, const RewriteRule& rule,
                             std::size_t cap = kDefaultIterationCap);

}  // namespace irgraph

#endif  // IRGRAPH_REWRITE_HPP_
