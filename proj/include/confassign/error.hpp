/*
Copyright 2026 The confassign Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    https://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace confassign {

// Every domain failure carries one of these codes. The textual name is part
// of the external contract: the CLI prints it in diagnostics and the service
// returns it in error payloads.
enum class ErrorCode {
  kMalformedXml,
  kDuplicateId,
  kMultipleRoots,
  kEmptyDocument,
  kUnknownKeyword,
  kEmptyPaperSet,
  kUnknownPaper,
  kUnknownReviewer,
  kUnknownId,
  kInvalidConference,
  kInfeasible,
  kIllegalState,
  kUnknownEdge,
  kDuplicateEdge,
  kConflictRequiresForce,
  kCapacityRequiresForce,
  kSchemaVersionMismatch,
  kMalformedDocument,
  kIoError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const { return to_string(code_); }

 private:
  ErrorCode code_;
};

// Raised by the solvers when some papers cannot reach the requested number
// of reviewers. `starved` lists the offending paper ids (or row indices
// rendered as strings for the raw matching routine).
class InfeasibleError : public Error {
 public:
  explicit InfeasibleError(std::vector<std::string> starved);

  const std::vector<std::string>& starved() const noexcept { return starved_; }

 private:
  std::vector<std::string> starved_;
};

}  // namespace confassign
