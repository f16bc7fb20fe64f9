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
// Exception types raised by the graph model, the passes and the tooling.

#ifndef IRGRAPH_ERROR_HPP_
#define IRGRAPH_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace irgraph {

enum class ErrorCode {
  kSchema,
  kDanglingEndpoint,
  kNotFound,
  kSameNode,
  kApplier,
  kKeyIsOwnDuplicate,
  kIterationLimitExceeded,
  kUnknownRelation,
  kUnknownKind,
  kMalformedCond,
  kVerificationFailed,
  kParse,
  kSpec,
  kUnresolvable,
  kMissingArgument,
  kExecutionTrap,
};

std::string_view errorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }
  // The message without the error-name prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

#define IRGRAPH_DECLARE_ERROR(Name, Code)                     \
  class Name : public Error {                                 \
   public:                                                    \
    explicit Name(const std::string& message)                 \
        : Error(ErrorCode::Code, message) {}                  \
  }

IRGRAPH_DECLARE_ERROR(SchemaError, kSchema);
IRGRAPH_DECLARE_ERROR(DanglingEndpoint, kDanglingEndpoint);
IRGRAPH_DECLARE_ERROR(NotFound, kNotFound);
IRGRAPH_DECLARE_ERROR(SameNode, kSameNode);
IRGRAPH_DECLARE_ERROR(ApplierError, kApplier);
IRGRAPH_DECLARE_ERROR(KeyIsOwnDuplicate, kKeyIsOwnDuplicate);
IRGRAPH_DECLARE_ERROR(IterationLimitExceeded, kIterationLimitExceeded);
IRGRAPH_DECLARE_ERROR(UnknownRelation, kUnknownRelation);
IRGRAPH_DECLARE_ERROR(UnknownKind, kUnknownKind);
IRGRAPH_DECLARE_ERROR(MalformedCond, kMalformedCond);
IRGRAPH_DECLARE_ERROR(VerificationFailed, kVerificationFailed);
IRGRAPH_DECLARE_ERROR(ParseError, kParse);
IRGRAPH_DECLARE_ERROR(SpecError, kSpec);
IRGRAPH_DECLARE_ERROR(Unresolvable, kUnresolvable);
IRGRAPH_DECLARE_ERROR(MissingArgument, kMissingArgument);
// Runtime fault while interpreting, e.g. integer division by zero.
IRGRAPH_DECLARE_ERROR(ExecutionTrap, kExecutionTrap);

#undef IRGRAPH_DECLARE_ERROR

}  // namespace irgraph

#endif  // IRGRAPH_ERROR_HPP_
