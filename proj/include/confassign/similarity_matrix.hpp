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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>

#include "confassign/error.hpp"

namespace confassign {

// Where a matrix cell's value came from. Conflict cells always hold 0.
enum class Provenance : std::int8_t { kComputed = 0, kBid = 1, kConflict = 2 };

std::string_view to_string(Provenance p);
std::optional<Provenance> parse_provenance(std::string_view text);

using BoolMatrix = Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic>;

/// Paper x reviewer grid of similarity factors, each with its provenance.
/// Rows follow the paper id list, columns the reviewer id list.
template <typename Scalar>
class BasicSimilarityMatrix {
 public:
  using FactorMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using ProvenanceMatrix = Eigen::Matrix<std::int8_t, Eigen::Dynamic, Eigen::Dynamic>;
  using Index = Eigen::Index;

  BasicSimilarityMatrix() = default;

  BasicSimilarityMatrix(std::vector<std::string> papers, std::vector<std::string> reviewers)
      : papers_(std::move(papers)), reviewers_(std::move(reviewers)) {
    factors_ = FactorMatrix::Zero(rows(), cols());
    provenance_ = ProvenanceMatrix::Zero(rows(), cols());
    reindex();
  }

  Index rows() const { return static_cast<Index>(papers_.size()); }
  Index cols() const { return static_cast<Index>(reviewers_.size()); }

  const std::vector<std::string>& papers() const { return papers_; }
  const std::vector<std::string>& reviewers() const { return reviewers_; }

  Index paper_index(std::string_view id) const {
    const auto it = paper_index_.find(std::string(id));
    if (it == paper_index_.end()) {
      throw Error(ErrorCode::kUnknownPaper, "unknown paper '" + std::string(id) + "'");
    }
    return it->second;
  }

  Index reviewer_index(std::string_view id) const {
    const auto it = reviewer_index_.find(std::string(id));
    if (it == reviewer_index_.end()) {
      throw Error(ErrorCode::kUnknownReviewer, "unknown reviewer '" + std::string(id) + "'");
    }
    return it->second;
  }

  Scalar factor(Index i, Index j) const { return factors_(i, j); }
  Provenance provenance(Index i, Index j) const {
    return static_cast<Provenance>(provenance_(i, j));
  }

  void set(Index i, Index j, Scalar value, Provenance p) {
    factors_(i, j) = p == Provenance::kConflict ? Scalar(0) : value;
    provenance_(i, j) = static_cast<std::int8_t>(p);
  }

  const FactorMatrix& factors() const { return factors_; }

  BoolMatrix conflict_mask() const {
    return (provenance_.array() == static_cast<std::int8_t>(Provenance::kConflict)).matrix();
  }

  friend bool operator==(const BasicSimilarityMatrix& a, const BasicSimilarityMatrix& b) {
    return a.papers_ == b.papers_ && a.reviewers_ == b.reviewers_ &&
           a.factors_ == b.factors_ && a.provenance_ == b.provenance_;
  }

 private:
  void reindex() {
    paper_index_.clear();
    reviewer_index_.clear();
    for (Index i = 0; i < rows(); ++i) paper_index_.emplace(papers_[i], i);
    for (Index j = 0; j < cols(); ++j) reviewer_index_.emplace(reviewers_[j], j);
  }

  std::vector<std::string> papers_;
  std::vector<std::string> reviewers_;
  std::unordered_map<std::string, Index> paper_index_;
  std::unordered_map<std::string, Index> reviewer_index_;
  FactorMatrix factors_;
  ProvenanceMatrix provenance_;
};

using SimilarityMatrix = BasicSimilarityMatrix<double>;

}  // namespace confassign
