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
#include <span>
#include <string>
#include <string_view>
#include <utility>

#include "confassign/similarity_matrix.hpp"

namespace confassign {

enum class BidLevel {
  kExpertWilling,
  kExpert,
  kCapableNotExpert,
  kNotWilling,
  kConflictOfInterest,
};

enum class BidMode { kStatic, kDynamic };

std::string_view to_string(BidLevel level);
std::optional<BidLevel> parse_bid_level(std::string_view text);
std::string_view to_string(BidMode mode);
std::optional<BidMode> parse_bid_mode(std::string_view text);

// (paper id, reviewer id)
using PairKey = std::pair<std::string, std::string>;
using BidMap = std::map<PairKey, BidLevel>;

/// Fixed bid table: 1.0, 0.9, 0.6, 0.1, 0.0 from most to least eager.
double static_bid_to_similarity(BidLevel level);

/// Raises the static value of a positive bid to the nearest-rank quantile of
/// the paper's non-zero computed factors (rank 1.0, 0.75, 0.5 for
/// ExpertWilling, Expert, CapableNotExpert). NotWilling and
/// ConflictOfInterest keep their static values.
double dynamic_bid_to_similarity(BidLevel level, std::span<const double> computed_for_paper);

/// Replaces every bid cell by its converted value. ConflictOfInterest bids
/// become Conflict cells; all others become Bid cells. In dynamic mode the
/// quantiles come from the Computed cells of the input matrix row.
SimilarityMatrix apply_bids(SimilarityMatrix matrix, const BidMap& bids, BidMode mode);

}  // namespace confassign
