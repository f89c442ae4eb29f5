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

#include <map>
#include <optional>
#include <set>
#include <string_view>

#include "confassign/taxonomy.hpp"

namespace confassign {

enum class CompetenceLevel { kLow, kMedium, kHigh };

std::string_view to_string(CompetenceLevel level);
std::optional<CompetenceLevel> parse_competence_level(std::string_view text);

// One reviewer keyword. `inferred` marks entries added by
// expand_reviewer_selection rather than picked by the reviewer; only picked
// entries can trigger expansion.
struct SelectionEntry {
  CompetenceLevel level = CompetenceLevel::kHigh;
  bool inferred = false;

  friend bool operator==(const SelectionEntry&, const SelectionEntry&) = default;
};

using ReviewerSelection = std::map<KeywordId, SelectionEntry>;
using PaperKeywordSet = std::set<KeywordId>;

}  // namespace confassign
