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

#include "confassign/error.hpp"

namespace confassign {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedXml: return "MalformedXml";
    case ErrorCode::kDuplicateId: return "DuplicateId";
    case ErrorCode::kMultipleRoots: return "MultipleRoots";
    case ErrorCode::kEmptyDocument: return "EmptyDocument";
    case ErrorCode::kUnknownKeyword: return "UnknownKeyword";
    case ErrorCode::kEmptyPaperSet: return "EmptyPaperSet";
    case ErrorCode::kUnknownPaper: return "UnknownPaper";
    case ErrorCode::kUnknownReviewer: return "UnknownReviewer";
    case ErrorCode::kUnknownId: return "UnknownId";
    case ErrorCode::kInvalidConference: return "InvalidConference";
    case ErrorCode::kInfeasible: return "Infeasible";
    case ErrorCode::kIllegalState: return "IllegalState";
    case ErrorCode::kUnknownEdge: return "UnknownEdge";
    case ErrorCode::kDuplicateEdge: return "DuplicateEdge";
    case ErrorCode::kConflictRequiresForce: return "ConflictRequiresForce";
    case ErrorCode::kCapacityRequiresForce: return "CapacityRequiresForce";
    case ErrorCode::kSchemaVersionMismatch: return "SchemaVersionMismatch";
    case ErrorCode::kMalformedDocument: return "MalformedDocument";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code) {}

namespace {

std::string join_ids(const std::vector<std::string>& ids) {
  std::string out;
  for (const auto& id : ids) {
    if (!out.empty()) out += ", ";
    out += id;
  }
  return out;
}

}  // namespace

InfeasibleError::InfeasibleError(std::vector<std::string> starved)
    : Error(ErrorCode::kInfeasible,
            "cannot reach the required reviewer count for: " +
                join_ids(starved)),
      starved_(std::move(starved)) {}

}  // namespace confassign
