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

#include "irgraph/serialize.hpp"

#include <algorithm>
#include <limits>

#include "irgraph/error.hpp"
#include "json.hpp"

namespace irgraph {
namespace {

using nlohmann::json;

json encodeAttr(const AttrValue& value) {
  struct Visitor {
    json operator()(bool b) const { return b; }
    json operator()(std::int32_t v) const { return v; }
    json operator()(const std::string& s) const { return s; }
    json operator()(Relation r) const { return std::string(relationName(r)); }
  };
  return std::visit(Visitor{}, value);
}

json parseDocument(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& ex) {
    const auto upTo = std::min<std::size_t>(ex.byte, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + upTo, '\n');
    throw ParseError("line " + std::to_string(line) + ": " + ex.what());
  }
}

const json& field(const json& obj, const char* name, const std::string& where) {
  if (!obj.is_object() || !obj.contains(name)) {
    throw ParseError(where + ": missing \"" + name + "\"");
  }
  return obj.at(name);
}

std::int64_t integerField(const json& obj, const char* name,
                          const std::string& where) {
  const json& v = field(obj, name, where);
  if (!v.is_number_integer()) {
    throw ParseError(where + ": \"" + name + "\" must be an integer");
  }
  return v.get<std::int64_t>();
}

std::uint32_t idField(const json& obj, const char* name,
                      const std::string& where) {
  const std::int64_t id = integerField(obj, name, where);
  if (id <= 0 || id > std::numeric_limits<std::uint32_t>::max()) {
    throw ParseError(where + ": \"" + name + "\" must be a positive id");
  }
  return static_cast<std::uint32_t>(id);
}

std::int32_t toInt32(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw SchemaError(where + " must be an integer");
  const auto wide = v.get<std::int64_t>();
  if (wide < std::numeric_limits<std::int32_t>::min() ||
      wide > std::numeric_limits<std::int32_t>::max()) {
    throw SchemaError(where + " does not fit 32 bits");
  }
  return static_cast<std::int32_t>(wide);
}

// Converts using the kind's schema where the name is known, by JSON type
// otherwise so that conformAttrs reports the stray attribute.
AttrMap decodeAttrs(NodeKind kind, const json& attrs, const std::string& where) {
  if (!attrs.is_object()) throw ParseError(where + ": \"attrs\" must be an object");
  AttrMap out;
  for (const auto& [name, v] : attrs.items()) {
    const std::string at = where + " attribute '" + name + "'";
    const auto type = attrTypeIn(kind, name);
    if (type == AttrType::kRelation) {
      if (!v.is_string()) throw SchemaError(at + " must be a relation name");
      try {
        out.emplace(name, parseRelation(v.get<std::string>()));
      } catch (const UnknownRelation& ex) {
        throw SchemaError(at + ": " + ex.detail());
      }
    } else if (v.is_boolean()) {
      out.emplace(name, v.get<bool>());
    } else if (v.is_number_integer()) {
      out.emplace(name, toInt32(v, at));
    } else if (v.is_string()) {
      out.emplace(name, v.get<std::string>());
    } else {
      throw SchemaError(at + " has an unsupported value");
    }
  }
  return out;
}

template <class Fn>
void withContext(const std::string& where, Fn&& fn) {
  try {
    fn();
  } catch (const SchemaError& ex) {
    throw SchemaError(where + ": " + ex.detail());
  }
}

}  // namespace

std::string saveGraph(const IrGraph& graph,
                      const std::optional<std::string>& name) {
  json doc;
  doc["meta"] = {{"formatVersion", std::string(kFormatVersion)}};
  if (name) doc["meta"]["name"] = *name;

  json nodes = json::array();
  for (NodeId n : graph.nodes()) {
    json attrs = json::object();
    for (const auto& [key, value] : graph.attrs(n)) attrs[key] = encodeAttr(value);
    nodes.push_back({{"id", n.value},
                     {"kind", std::string(kindName(graph.kind(n)))},
                     {"attrs", std::move(attrs)}});
  }
  json edges = json::array();
  for (EdgeId e : graph.edges()) {
    const Edge& edge = graph.edge(e);
    json attrs = {{"position", edge.attrs.position}};
    if (edge.attrs.branch) attrs["branch"] = *edge.attrs.branch;
    edges.push_back({{"id", e.value},
                     {"kind", std::string(edgeKindName(edge.kind))},
                     {"source", edge.source.value},
                     {"target", edge.target.value},
                     {"attrs", std::move(attrs)}});
  }
  doc["nodes"] = std::move(nodes);
  doc["edges"] = std::move(edges);
  return doc.dump(2) + "\n";
}

IrGraph loadGraph(std::string_view text) {
  const json doc = parseDocument(text);
  if (!doc.is_object()) throw ParseError("document must be a JSON object");
  if (doc.contains("meta")) {
    const json& meta = doc.at("meta");
    const json& version = field(meta, "formatVersion", "meta");
    if (!version.is_string() || version.get<std::string>() != kFormatVersion) {
      throw ParseError("meta: unsupported formatVersion " + version.dump());
    }
  }
  const json& nodes = field(doc, "nodes", "document");
  const json& edges = field(doc, "edges", "document");
  if (!nodes.is_array() || !edges.is_array()) {
    throw ParseError("\"nodes\" and \"edges\" must be arrays");
  }

  struct Entry {
    std::uint32_t id;
    std::size_t index;
  };
  auto sortedEntries = [](const json& list, const char* what) {
    std::vector<Entry> entries;
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string where = std::string(what) + "[" + std::to_string(i) + "]";
      entries.push_back({idField(list[i], "id", where), i});
    }
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.id < b.id; });
    for (std::size_t i = 1; i < entries.size(); ++i) {
      if (entries[i].id == entries[i - 1].id) {
        throw ParseError(std::string(what) + ": duplicate id " +
                         std::to_string(entries[i].id));
      }
    }
    return entries;
  };

  IrGraph graph;
  for (const Entry& entry : sortedEntries(nodes, "nodes")) {
    const json& node = nodes[entry.index];
    const std::string where = "nodes[" + std::to_string(entry.index) +
                              "] (id " + std::to_string(entry.id) + ")";
    const json& kindName = field(node, "kind", where);
    const auto kind =
        kindName.is_string() ? parseNodeKind(kindName.get<std::string>())
                             : std::nullopt;
    if (!kind) throw ParseError(where + ": unknown kind " + kindName.dump());
    const json empty = json::object();
    const json& attrs = node.contains("attrs") ? node.at("attrs") : empty;
    withContext(where, [&] {
      graph.insertNode(NodeId{entry.id}, *kind, decodeAttrs(*kind, attrs, where));
    });
  }

  for (const Entry& entry : sortedEntries(edges, "edges")) {
    const json& edge = edges[entry.index];
    const std::string where = "edges[" + std::to_string(entry.index) +
                              "] (id " + std::to_string(entry.id) + ")";
    const json& kindName = field(edge, "kind", where);
    const auto kind = kindName.is_string()
                          ? parseEdgeKind(kindName.get<std::string>())
                          : std::nullopt;
    if (!kind) throw ParseError(where + ": unknown edge kind " + kindName.dump());
    const NodeId source{idField(edge, "source", where)};
    const NodeId target{idField(edge, "target", where)};
    for (NodeId end : {source, target}) {
      if (!graph.contains(end)) {
        throw ParseError(where + ": endpoint " + std::to_string(end.value) +
                         " does not resolve");
      }
    }
    const json& attrs = field(edge, "attrs", where);
    EdgeAttrs edgeAttrs;
    withContext(where, [&] {
      edgeAttrs.position = toInt32(field(attrs, "position", where), "position");
      if (attrs.contains("branch")) {
        if (!attrs.at("branch").is_boolean()) {
          throw SchemaError("branch must be a boolean");
        }
        edgeAttrs.branch = attrs.at("branch").get<bool>();
      }
      for (const auto& [key, value] : attrs.items()) {
        if (key != "position" && key != "branch") {
          throw SchemaError("unknown edge attribute '" + key + "'");
        }
      }
      graph.insertEdge(EdgeId{entry.id}, *kind, source, target, edgeAttrs);
    });
  }
  return graph;
}

std::optional<std::string> graphName(std::string_view text) {
  const json doc = parseDocument(text);
  if (doc.is_object() && doc.contains("meta") && doc["meta"].contains("name") &&
      doc["meta"]["name"].is_string()) {
    return doc["meta"]["name"].get<std::string>();
  }
  return std::nullopt;
}

}  // namespace irgraph
