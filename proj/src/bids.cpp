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

#include "confassign/bids.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace confassign {

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::kComputed: return "Computed";
    case Provenance::kBid: return "Bid";
    case Provenance::kConflict: return "Conflict";
  }
  return "Computed";
}

std::optional<Provenance> parse_provenance(std::string_view text) {
  if (text == "Computed") return Provenance::kComputed;
  if (text == "Bid") return Provenance::kBid;
  if (text == "Conflict") return Provenance::kConflict;
  return std::nullopt;
}

std::string_view to_string(BidLevel level) {
  switch (level) {
    case BidLevel::kExpertWilling: return "ExpertWilling";
    case BidLevel::kExpert: return "Expert";
    case BidLevel::kCapableNotExpert: return "CapableNotExpert";
    case BidLevel::kNotWilling: return "NotWilling";
    case BidLevel::kConflictOfInterest: return "ConflictOfInterest";
  }
  return "NotWilling";
}

std::optional<BidLevel> parse_bid_level(std::string_view text) {
  for (auto level : {BidLevel::kExpertWilling, BidLevel::kExpert, BidLevel::kCapableNotExpert,
                     BidLevel::kNotWilling, BidLevel::kConflictOfInterest}) {
    if (to_string(level) == text) return level;
  }
  return std::nullopt;
}

std::string_view to_string(BidMode mode) {
  return mode == BidMode::kStatic ? "Static" : "Dynamic";
}

std::optional<BidMode> parse_bid_mode(std::string_view text) {
  if (text == "Static") return BidMode::kStatic;
  if (text == "Dynamic") return BidMode::kDynamic;
  return std::nullopt;
}

double static_bid_to_similarity(BidLevel level) {
  switch (level) {
    case BidLevel::kExpertWilling: return 1.0;
    case BidLevel::kExpert: return 0.9;
    case BidLevel::kCapableNotExpert: return 0.6;
    case BidLevel::kNotWilling: return 0.1;
    case BidLevel::kConflictOfInterest: return 0.0;
  }
  return 0.0;
}

namespace {

std::optional<double> quantile_rank(BidLevel level) {
  switch (level) {
    case BidLevel::kExpertWilling: return 1.0;
    case BidLevel::kExpert: return 0.75;
    case BidLevel::kCapableNotExpert: return 0.5;
    default: return std::nullopt;
  }
}

}  // namespace

double dynamic_bid_to_similarity(BidLevel level, std::span<const double> computed_for_paper) {
  const double fixed = static_bid_to_similarity(level);
  const auto rank = quantile_rank(level);
  if (!rank) return fixed;

  std::vector<double> values;
  for (double v : computed_for_paper) {
    if (v > 0.0) values.push_back(v);
  }
  if (values.empty()) return fixed;
  std::sort(values.begin(), values.end());
  // Nearest rank: the ceil(r * n)-th smallest value, 1-based.
  auto pos = static_cast<std::size_t>(std::ceil(*rank * static_cast<double>(values.size())));
  pos = std::clamp<std::size_t>(pos, 1, values.size());
  return std::max(fixed, values[pos - 1]);
}

SimilarityMatrix apply_bids(SimilarityMatrix matrix, const BidMap& bids, BidMode mode) {
  if (bids.empty()) return matrix;

  std::vector<std::pair<SimilarityMatrix::Index, SimilarityMatrix::Index>> cells;
  cells.reserve(bids.size());
  for (const auto& [key, level] : bids) {
    cells.emplace_back(matrix.paper_index(key.first), matrix.reviewer_index(key.second));
  }

  // Quantiles must see the pre-bid row, so gather them before writing.
  std::vector<std::vector<double>> computed_rows;
  if (mode == BidMode::kDynamic) {
    computed_rows.resize(static_cast<std::size_t>(matrix.rows()));
    for (SimilarityMatrix::Index i = 0; i < matrix.rows(); ++i) {
      for (SimilarityMatrix::Index j = 0; j < matrix.cols(); ++j) {
        if (matrix.provenance(i, j) == Provenance::kComputed) {
          computed_rows[static_cast<std::size_t>(i)].push_back(matrix.factor(i, j));
        }
      }
    }
  }

  std::size_t n = 0;
  for (const auto& [key, level] : bids) {
    const auto [i, j] = cells[n++];
    // A conflict placed by an earlier overlay outranks any bid.
    if (matrix.provenance(i, j) == Provenance::kConflict) continue;
    if (level == BidLevel::kConflictOfInterest) {
      matrix.set(i, j, 0.0, Provenance::kConflict);
      continue;
    }
    const double value = mode == BidMode::kStatic
                             ? static_bid_to_similarity(level)
                             : dynamic_bid_to_similarity(level, computed_rows[static_cast<std::size_t>(i)]);
    matrix.set(i, j, value, Provenance::kBid);
  }
  return matrix;
}

}  // namespace confassign
