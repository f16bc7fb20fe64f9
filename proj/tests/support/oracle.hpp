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
// Reference arithmetic over unbounded integers, reduced to 32 bits at the end.

#ifndef IRGRAPH_TESTS_ORACLE_HPP_
#define IRGRAPH_TESTS_ORACLE_HPP_

#include <cstdint>
#include <optional>

#include "irgraph/kinds.hpp"

namespace irgraph::testing {

// nullopt for Div/Mod by zero.
std::optional<std::int32_t> oracleBinary(NodeKind kind,
                                         std::optional<Relation> relation,
                                         std::int32_t lhs, std::int32_t rhs);

}  // namespace irgraph::testing

#endif  // IRGRAPH_TESTS_ORACLE_HPP_
