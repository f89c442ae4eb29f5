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

#include "confassign/similarity.hpp"

#include <algorithm>

#include "confassign/error.hpp"

namespace confassign {

double keyword_pair_similarity(const Taxonomy& t, std::string_view a, std::string_view b) {
  const int da = t.depth(a);
  const int db = t.depth(b);
  if (a == b) return 1.0;
  // a != b rules out a zero denominator: only the root has depth 0.
  return 2.0 * t.depth(t.lca(a, b)) / static_cast<double>(da + db);
}

double level_weight(CompetenceLevel level, const LevelWeights& weights) {
  switch (level) {
    case CompetenceLevel::kHigh: return weights.high;
    case CompetenceLevel::kMedium: return weights.medium;
    case CompetenceLevel::kLow: return weights.low;
  }
  return weights.low;
}

double set_similarity(const Taxonomy& t, const PaperKeywordSet& paper,
                      const ReviewerSelection& selection, const LevelWeights& weights) {
  if (paper.empty()) throw Error(ErrorCode::kEmptyPaperSet, "paper has no keywords");
  double sum = 0.0;
  for (const auto& p : paper) {
    t.node(p);
    double best = 0.0;
    for (const auto& [r, entry] : selection) {
      best = std::max(best, keyword_pair_similarity(t, p, r) * level_weight(entry.level, weights));
    }
    sum += best;
  }
  return sum / static_cast<double>(paper.size());
}

}  // namespace confassign
