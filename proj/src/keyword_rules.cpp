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

#include "confassign/keyword_rules.hpp"

#include <algorithm>
#include <vector>

#include "confassign/error.hpp"
#include "confassign/similarity.hpp"

namespace confassign {

std::string_view to_string(CompetenceLevel level) {
  switch (level) {
    case CompetenceLevel::kHigh: return "High";
    case CompetenceLevel::kMedium: return "Medium";
    case CompetenceLevel::kLow: return "Low";
  }
  return "Low";
}

std::optional<CompetenceLevel> parse_competence_level(std::string_view text) {
  if (text == "High") return CompetenceLevel::kHigh;
  if (text == "Medium") return CompetenceLevel::kMedium;
  if (text == "Low") return CompetenceLevel::kLow;
  return std::nullopt;
}

ReviewerSelection expand_reviewer_selection(const Taxonomy& t,
                                            const ReviewerSelection& selection,
                                            int depth_threshold) {
  ReviewerSelection out = selection;
  for (const auto& [keyword, entry] : selection) {
    const auto& kids = t.children(keyword);
    if (entry.inferred || entry.level == CompetenceLevel::kLow) continue;
    if (t.depth(keyword) >= depth_threshold || kids.empty()) continue;
    const bool child_selected = std::any_of(kids.begin(), kids.end(), [&](const auto& c) {
      return selection.count(c) != 0;
    });
    if (child_selected) continue;
    for (const auto& c : kids) out.emplace(c, SelectionEntry{entry.level, true});
  }
  return out;
}

PaperKeywordSet reduce_parent_child(const Taxonomy& t, const PaperKeywordSet& ks) {
  PaperKeywordSet out;
  for (const auto& k : ks) {
    const auto& kids = t.children(k);
    const bool is_parent = std::any_of(kids.begin(), kids.end(),
                                       [&](const auto& c) { return ks.count(c) != 0; });
    if (!is_parent) out.insert(k);
  }
  return out;
}

ReviewerSelection restrict_to_closest(const Taxonomy& t, const PaperKeywordSet& paper,
                                      const ReviewerSelection& selection) {
  if (paper.empty()) throw Error(ErrorCode::kEmptyPaperSet, "paper has no keywords");
  for (const auto& [k, _] : selection) t.node(k);

  ReviewerSelection out;
  std::vector<double> sims(selection.size());
  for (const auto& p : paper) {
    std::size_t i = 0;
    for (const auto& [r, _] : selection) sims[i++] = keyword_pair_similarity(t, p, r);
    if (sims.empty()) continue;
    const double best = *std::max_element(sims.begin(), sims.end());
    i = 0;
    for (const auto& [r, entry] : selection) {
      if (sims[i++] == best) out.emplace(r, entry);
    }
  }
  return out;
}

}  // namespace confassign
