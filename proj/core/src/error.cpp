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

#include "irgraph/error.hpp"

namespace irgraph {

std::string_view errorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSchema: return "SchemaError";
    case ErrorCode::kDanglingEndpoint: return "DanglingEndpoint";
    case ErrorCode::kNotFound: return "NotFound";
    case ErrorCode::kSameNode: return "SameNode";
    case ErrorCode::kApplier: return "ApplierError";
    case ErrorCode::kKeyIsOwnDuplicate: return "KeyIsOwnDuplicate";
    case ErrorCode::kIterationLimitExceeded: return "IterationLimitExceeded";
    case ErrorCode::kUnknownRelation: return "UnknownRelation";
    case ErrorCode::kUnknownKind: return "UnknownKind";
    case ErrorCode::kMalformedCond: return "MalformedCond";
    case ErrorCode::kVerificationFailed: return "VerificationFailed";
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kSpec: return "SpecError";
    case ErrorCode::kUnresolvable: return "Unresolvable";
    case ErrorCode::kMissingArgument: return "MissingArgument";
    case ErrorCode::kExecutionTrap: return "ExecutionTrap";
  }
  return "Error";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(errorCodeName(code)) + ": " + message),
      code_(code),
      detail_(message) {}

}  // namespace irgraph
