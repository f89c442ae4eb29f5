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

#include "doctest.h"

#include <array>
#include <vector>

#include "confassign/bids.hpp"
#include "confassign/matrix_builder.hpp"
#include "test_support.hpp"

using namespace confassign;

namespace {

SimilarityMatrix grid(int rows, int cols, double start = 0.1) {
  std::vector<std::string> papers, reviewers;
  for (int i = 0; i < rows; ++i) papers.push_back("p" + std::to_string(i));
  for (int j = 0; j < cols; ++j) reviewers.push_back("r" + std::to_string(j));
  SimilarityMatrix m(papers, reviewers);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m.set(i, j, start + 0.1 * ((i + j) % 8), Provenance::kComputed);
  }
  return m;
}

}  // namespace

TEST_CASE("static bid values") {
  CHECK(static_bid_to_similarity(BidLevel::kExpertWilling) == 1.0);
  CHECK(static_bid_to_similarity(BidLevel::kExpert) == 0.9);
  CHECK(static_bid_to_similarity(BidLevel::kCapableNotExpert) == 0.6);
  CHECK(static_bid_to_similarity(BidLevel::kNotWilling) == 0.1);
  CHECK(static_bid_to_similarity(BidLevel::kConflictOfInterest) == 0.0);
}

TEST_CASE("dynamic bid values") {
  const std::vector<double> none;
  CHECK(dynamic_bid_to_similarity(BidLevel::kCapableNotExpert, none) == 0.6);
  const std::vector<double> low{0.2, 0.5, 0.8};
  CHECK(dynamic_bid_to_similarity(BidLevel::kExpertWilling, low) == 1.0);
  const std::vector<double> high{0.7, 0.9, 0.95};
  CHECK(dynamic_bid_to_similarity(BidLevel::kCapableNotExpert, high) == 0.9);
  CHECK(dynamic_bid_to_similarity(BidLevel::kExpert, high) == 0.95);
  CHECK(dynamic_bid_to_similarity(BidLevel::kNotWilling, high) == 0.1);
  CHECK(dynamic_bid_to_similarity(BidLevel::kConflictOfInterest, high) == 0.0);
  // Zeros are ignored when ranking.
  const std::vector<double> sparse{0.0, 0.0, 0.4};
  CHECK(dynamic_bid_to_similarity(BidLevel::kCapableNotExpert, sparse) == 0.6);
}

TEST_CASE("dynamic never falls below static and keeps level order") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> grid20(0, 20);
  for (int round = 0; round < 500; ++round) {
    std::vector<double> row(static_cast<std::size_t>(rng() % 8));
    for (auto& v : row) v = grid20(rng) * 0.05;
    double prev = 2.0;
    for (auto level : {BidLevel::kExpertWilling, BidLevel::kExpert, BidLevel::kCapableNotExpert,
                       BidLevel::kNotWilling, BidLevel::kConflictOfInterest}) {
      const double d = dynamic_bid_to_similarity(level, row);
      CHECK(d >= static_bid_to_similarity(level));
      CHECK(d <= prev);
      prev = d;
    }
  }
}

TEST_CASE("apply_bids overlays") {
  const SimilarityMatrix base = grid(3, 3);
  CHECK(apply_bids(base, {}, BidMode::kStatic) == base);

  const SimilarityMatrix one =
      apply_bids(base, {{{"p1", "r2"}, BidLevel::kExpert}}, BidMode::kStatic);
  CHECK(one.factor(1, 2) == 0.9);
  CHECK(one.provenance(1, 2) == Provenance::kBid);
  int changed = 0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) changed += one.factor(i, j) != base.factor(i, j) ||
                                           one.provenance(i, j) != base.provenance(i, j);
  }
  CHECK(changed == 1);

  const SimilarityMatrix coi =
      apply_bids(base, {{{"p0", "r0"}, BidLevel::kConflictOfInterest}}, BidMode::kDynamic);
  CHECK(coi.factor(0, 0) == 0.0);
  CHECK(coi.provenance(0, 0) == Provenance::kConflict);

  CHECK_THROWS_AS(apply_bids(base, {{{"px", "r0"}, BidLevel::kExpert}}, BidMode::kStatic), Error);
}

TEST_CASE("dynamic quantiles come from computed cells only") {
  SimilarityMatrix m = grid(1, 4);
  m.set(0, 0, 0.7, Provenance::kComputed);
  m.set(0, 1, 0.9, Provenance::kComputed);
  m.set(0, 2, 0.95, Provenance::kComputed);
  m.set(0, 3, 0.2, Provenance::kComputed);
  const BidMap bids{{{"p0", "r3"}, BidLevel::kCapableNotExpert},
                    {{"p0", "r2"}, BidLevel::kNotWilling}};
  const auto out = apply_bids(m, bids, BidMode::kDynamic);
  // Row values {0.2, 0.7, 0.9, 0.95}: nearest-rank median is 0.7.
  CHECK(out.factor(0, 3) == 0.7);
  CHECK(out.factor(0, 2) == 0.1);
}

TEST_CASE("randomized precedence: Conflict > Bid > Computed") {
  const Taxonomy t = confassign::testing::fixture_taxonomy();
  std::mt19937 rng(17);
  const std::array<const char*, 7> keys{"CS", "SW", "IS", "CMS", "DL", "PL", "HW"};
  for (int round = 0; round < 100; ++round) {
    Conference conf;
    const int P = 1 + static_cast<int>(rng() % 5);
    const int R = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < P; ++i) {
      conf.papers.push_back({"p" + std::to_string(i), "", {}, {keys[rng() % keys.size()]}});
    }
    for (int j = 0; j < R; ++j) {
      Reviewer r{"r" + std::to_string(j), {}};
      r.selection.emplace(keys[rng() % keys.size()], SelectionEntry{CompetenceLevel::kHigh, false});
      conf.reviewers.push_back(std::move(r));
    }
    CoISet conflicts;
    for (int i = 0; i < P; ++i) {
      for (int j = 0; j < R; ++j) {
        const PairKey key{"p" + std::to_string(i), "r" + std::to_string(j)};
        if (rng() % 3 == 0) conf.bids[key] = static_cast<BidLevel>(rng() % 5);
        if (rng() % 4 == 0) conflicts.insert({key.first, key.second, CoIReason::kExplicit, "x"});
      }
    }
    const SimilarityMatrix computed = compute_similarity_matrix(t, conf, prepare_keywords(t, conf));
    const SimilarityMatrix m = build_similarity_matrix(t, conf, conflicts);
    for (int i = 0; i < P; ++i) {
      for (int j = 0; j < R; ++j) {
        const PairKey key{"p" + std::to_string(i), "r" + std::to_string(j)};
        const bool has_conflict = conflicts.count({key.first, key.second, CoIReason::kExplicit, ""});
        const auto bid = conf.bids.find(key);
        if (has_conflict || (bid != conf.bids.end() && bid->second == BidLevel::kConflictOfInterest)) {
          CHECK(m.provenance(i, j) == Provenance::kConflict);
          CHECK(m.factor(i, j) == 0.0);
        } else if (bid != conf.bids.end()) {
          CHECK(m.provenance(i, j) == Provenance::kBid);
          CHECK(m.factor(i, j) == static_bid_to_similarity(bid->second));
        } else {
          CHECK(m.provenance(i, j) == Provenance::kComputed);
          CHECK(m.factor(i, j) == computed.factor(i, j));
        }
      }
    }
  }
}

TEST_CASE("enum names round trip") {
  for (auto l : {BidLevel::kExpertWilling, BidLevel::kExpert, BidLevel::kCapableNotExpert,
                 BidLevel::kNotWilling, BidLevel::kConflictOfInterest}) {
    CHECK(parse_bid_level(to_string(l)) == l);
  }
  CHECK(parse_bid_mode("Dynamic") == BidMode::kDynamic);
  CHECK_FALSE(parse_bid_level("Maybe").has_value());
  CHECK(parse_provenance("Conflict") == Provenance::kConflict);
}
