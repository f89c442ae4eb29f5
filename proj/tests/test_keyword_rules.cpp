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

#include <algorithm>

#include "confassign/keyword_rules.hpp"
#include "confassign/similarity.hpp"
#include "test_support.hpp"

using namespace confassign;
using confassign::testing::fixture_taxonomy;

namespace {

constexpr auto H = CompetenceLevel::kHigh;
constexpr auto M = CompetenceLevel::kMedium;
constexpr auto L = CompetenceLevel::kLow;

ReviewerSelection sel(std::initializer_list<std::pair<const char*, CompetenceLevel>> items) {
  ReviewerSelection out;
  for (const auto& [k, l] : items) out.emplace(k, SelectionEntry{l, false});
  return out;
}

}  // namespace

TEST_CASE("expansion adds children of a shallow selected parent") {
  const Taxonomy t = fixture_taxonomy();
  const auto out = expand_reviewer_selection(t, sel({{"IS", H}}), 3);
  REQUIRE(out.size() == 3);
  CHECK(out.at("IS").level == H);
  CHECK_FALSE(out.at("IS").inferred);
  CHECK(out.at("CMS").level == H);
  CHECK(out.at("CMS").inferred);
  CHECK(out.at("DL").level == H);
  CHECK(out.at("DL").inferred);
}

TEST_CASE("expansion conditions") {
  const Taxonomy t = fixture_taxonomy();
  SUBCASE("low competence is left alone") {
    CHECK(expand_reviewer_selection(t, sel({{"IS", L}}), 3) == sel({{"IS", L}}));
  }
  SUBCASE("a selected child blocks expansion") {
    const auto in = sel({{"IS", H}, {"CMS", M}});
    CHECK(expand_reviewer_selection(t, in, 3) == in);
  }
  SUBCASE("leaves have nothing to add") {
    for (int threshold : {0, 1, 2, 3, 4}) {
      CHECK(expand_reviewer_selection(t, sel({{"CMS", H}}), threshold) == sel({{"CMS", H}}));
    }
  }
  SUBCASE("default threshold stops at depth 2") {
    CHECK(expand_reviewer_selection(t, sel({{"IS", H}})) == sel({{"IS", H}}));
    const auto out = expand_reviewer_selection(t, sel({{"SW", M}}));
    CHECK(out.size() == 3);
    CHECK(out.at("IS").inferred);
    CHECK(out.at("PL").level == M);
    CHECK(out.count("CMS") == 0);
  }
}

TEST_CASE("expansion is idempotent on the fixture") {
  const Taxonomy t = fixture_taxonomy();
  for (const auto* root : {"CS", "SW", "IS"}) {
    for (int threshold : {1, 2, 3, 4}) {
      const auto once = expand_reviewer_selection(t, sel({{root, H}}), threshold);
      CHECK(expand_reviewer_selection(t, once, threshold) == once);
    }
  }
}

TEST_CASE("parent-child reduction") {
  const Taxonomy t = fixture_taxonomy();
  CHECK(reduce_parent_child(t, {"SW", "IS", "CMS"}) == PaperKeywordSet{"CMS"});
  CHECK(reduce_parent_child(t, {"CMS", "DL"}) == PaperKeywordSet{"CMS", "DL"});
  CHECK(reduce_parent_child(t, {"SW", "CMS"}) == PaperKeywordSet{"SW", "CMS"});
  CHECK(reduce_parent_child(t, {"IS", "CMS", "DL", "PL"}) == PaperKeywordSet{"CMS", "DL", "PL"});
  CHECK(reduce_parent_child(t, {}).empty());
}

TEST_CASE("closest-pair restriction") {
  const Taxonomy t = fixture_taxonomy();
  CHECK(restrict_to_closest(t, {"CMS"}, sel({{"CMS", H}, {"HW", L}})) == sel({{"CMS", H}}));
  CHECK(restrict_to_closest(t, {"CMS"}, sel({{"DL", H}})) == sel({{"DL", H}}));
  CHECK(restrict_to_closest(t, {"CMS", "HW"}, sel({{"DL", H}, {"HW", M}})) ==
        sel({{"DL", H}, {"HW", M}}));
  // CMS and DL are equally close to a paper on IS; both survive.
  CHECK(restrict_to_closest(t, {"IS"}, sel({{"CMS", H}, {"DL", L}, {"HW", H}})) ==
        sel({{"CMS", H}, {"DL", L}}));
  CHECK(restrict_to_closest(t, {"CMS"}, {}).empty());
  CHECK_THROWS_AS(restrict_to_closest(t, {}, sel({{"DL", H}})), Error);
}

TEST_CASE("rules reject unknown keywords") {
  const Taxonomy t = fixture_taxonomy();
  CHECK_THROWS_AS(expand_reviewer_selection(t, sel({{"XX", H}})), Error);
  CHECK_THROWS_AS(reduce_parent_child(t, {"XX"}), Error);
  CHECK_THROWS_AS(restrict_to_closest(t, {"CMS"}, sel({{"XX", H}})), Error);
}

TEST_CASE("random trees: rule properties") {
  std::mt19937 rng(11);
  for (int round = 0; round < 200; ++round) {
    const int n = 1 + static_cast<int>(rng() % 50);
    const Taxonomy t = confassign::testing::random_tree(rng, n);
    const auto& nodes = t.nodes();
    ReviewerSelection s;
    PaperKeywordSet ks;
    for (const auto& node : nodes) {
      if (rng() % 4 == 0) s.emplace(node.id, SelectionEntry{static_cast<CompetenceLevel>(rng() % 3), false});
      if (rng() % 4 == 0) ks.insert(node.id);
    }
    const int threshold = static_cast<int>(rng() % 5);

    const auto expanded = expand_reviewer_selection(t, s, threshold);
    CHECK(expand_reviewer_selection(t, expanded, threshold) == expanded);
    for (const auto& [k, e] : s) CHECK(expanded.at(k) == e);

    const auto reduced = reduce_parent_child(t, ks);
    CHECK(std::includes(ks.begin(), ks.end(), reduced.begin(), reduced.end()));
    CHECK(reduce_parent_child(t, reduced) == reduced);
    for (const auto& a : reduced) {
      for (const auto& b : reduced) CHECK_FALSE(t.is_parent_of(a, b));
    }

    if (!ks.empty()) {
      const auto restricted = restrict_to_closest(t, ks, s);
      for (const auto& [k, e] : restricted) CHECK(s.at(k) == e);
      CHECK(restrict_to_closest(t, ks, s) == restricted);
      // Dropping candidates can only lower the max-based score.
      CHECK(set_similarity(t, ks, restricted) <= set_similarity(t, ks, s) + 1e-12);
    }
  }
}
