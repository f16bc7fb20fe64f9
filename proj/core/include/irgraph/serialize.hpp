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
// Text encoding of a graph as a JSON document:
//
//   {
//     "edges": [{"attrs": {"position": -1}, "id": 1, "kind": "Dataflow",
//                "source": 2, "target": 1}, ...],
//     "meta": {"formatVersion": "1", "name": "example"},
//     "nodes": [{"attrs": {}, "id": 1, "kind": "StartBlock"}, ...]
//   }
//
// Saved documents are canonical: elements ascend by id and object keys are
// sorted, so equal graphs serialize to identical bytes.

#ifndef IRGRAPH_SERIALIZE_HPP_
#define IRGRAPH_SERIALIZE_HPP_

#include <optional>
#include <string>
#include <string_view>

#include "irgraph/graph.hpp"

namespace irgraph {

inline constexpr std::string_view kFormatVersion = "1";

std::string saveGraph(const IrGraph& graph,
                      const std::optional<std::string>& name = std::nullopt);

// Element ids are preserved. Throws ParseError for malformed documents and
// SchemaError for attributes that do not fit their kind.
IrGraph loadGraph(std::string_view text);

// The meta.name of a document, if present. Throws ParseError.
std::optional<std::string> graphName(std::string_view text);

}  // namespace irgraph

#endif  // IRGRAPH_SERIALIZE_HPP_
