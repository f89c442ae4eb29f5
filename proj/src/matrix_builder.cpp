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

#include "confassign/matrix_builder.hpp"

#include "confassign/keyword_rules.hpp"
#include "confassign/similarity.hpp"

namespace confassign {

PreparedKeywords prepare_keywords(const Taxonomy& t, const Conference& conf) {
  PreparedKeywords out;
  out.papers.reserve(conf.papers.size());
  for (const auto& p : conf.papers) {
    out.papers.push_back(conf.config.reduce_paper_sets ? reduce_parent_child(t, p.keywords)
                                                       : p.keywords);
  }
  out.reviewers.reserve(conf.reviewers.size());
  for (const auto& r : conf.reviewers) {
    out.reviewers.push_back(expand_reviewer_selection(t, r.selection, conf.config.depth_threshold));
  }
  return out;
}

SimilarityMatrix compute_similarity_matrix(const Taxonomy& t, const Conference& conf,
                                           const PreparedKeywords& keywords) {
  SimilarityMatrix m(conf.paper_ids(), conf.reviewer_ids());
  const auto& weights = conf.config.level_weights;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    const auto& paper = keywords.papers[static_cast<std::size_t>(i)];
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const auto& sel = keywords.reviewers[static_cast<std::size_t>(j)];
      const double value = conf.config.restrict_to_closest
                               ? set_similarity(t, paper, restrict_to_closest(t, paper, sel), weights)
                               : set_similarity(t, paper, sel, weights);
      m.set(i, j, value, Provenance::kComputed);
    }
  }
  return m;
}

void apply_conflicts(SimilarityMatrix& matrix, const CoISet& conflicts) {
  for (const auto& c : conflicts) {
    matrix.set(matrix.paper_index(c.paper_id), matrix.reviewer_index(c.reviewer_id), 0.0,
               Provenance::kConflict);
  }
}

SimilarityMatrix build_similarity_matrix(const Taxonomy& t, const Conference& conf,
                                         const CoISet& conflicts) {
  SimilarityMatrix m = compute_similarity_matrix(t, conf, prepare_keywords(t, conf));
  m = apply_bids(std::move(m), conf.bids, conf.config.bid_mode);
  apply_conflicts(m, conflicts);
  return m;
}

}  // namespace confassign
