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

#include <vector>

#include "confassign/coi.hpp"
#include "confassign/conference.hpp"
#include "confassign/similarity_matrix.hpp"

namespace confassign {

// Keyword sets after the configured rewrites, in conference order.
struct PreparedKeywords {
  std::vector<PaperKeywordSet> papers;
  std::vector<ReviewerSelection> reviewers;
};

/// Expands reviewer selections and, if configured, reduces paper sets.
PreparedKeywords prepare_keywords(const Taxonomy& t, const Conference& conf);

/// All-Computed matrix of set similarities. Applies the closest-pair
/// restriction per cell when the configuration asks for it.
SimilarityMatrix compute_similarity_matrix(const Taxonomy& t, const Conference& conf,
                                           const PreparedKeywords& keywords);

void apply_conflicts(SimilarityMatrix& matrix, const CoISet& conflicts);

/// Computed values, overlaid by bids, overlaid by conflicts.
SimilarityMatrix build_similarity_matrix(const Taxonomy& t, const Conference& conf,
                                         const CoISet& conflicts);

}  // namespace confassign
