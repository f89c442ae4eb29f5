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
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "confassign/bids.hpp"
#include "confassign/keywords.hpp"
#include "confassign/similarity.hpp"
#include "confassign/taxonomy.hpp"

namespace confassign {

struct Person {
  std::string id;
  std::string name;
  std::string email;
  std::string country;      // ISO code, may be empty when unknown
  std::string affiliation;  // free text

  friend bool operator==(const Person&, const Person&) = default;
};

struct Paper {
  std::string id;
  std::string title;
  std::vector<std::string> author_ids;
  PaperKeywordSet keywords;

  friend bool operator==(const Paper&, const Paper&) = default;
};

struct Reviewer {
  std::string person_id;
  ReviewerSelection selection;

  friend bool operator==(const Reviewer&, const Reviewer&) = default;
};

struct ExplicitConflict {
  std::string paper_id;
  std::string reviewer_id;
  std::string evidence;

  friend bool operator==(const ExplicitConflict&, const ExplicitConflict&) = default;
};

enum class SolverKind { kMultipass, kGreedy };

std::string_view to_string(SolverKind kind);
std::optional<SolverKind> parse_solver_kind(std::string_view text);

struct ConferenceConfig {
  int k = 3;                          // reviewers per paper
  std::map<std::string, int> capacities;  // per-reviewer overrides
  int depth_threshold = 2;
  LevelWeights level_weights;
  BidMode bid_mode = BidMode::kStatic;
  bool same_country_rule = false;
  int year_window = 10;
  int current_year = 0;  // 0: take the year from the system clock
  bool reduce_paper_sets = true;
  bool restrict_to_closest = false;
  SolverKind solver = SolverKind::kMultipass;
  std::string bibliography_ref;  // optional DBLP-subset dump

  friend bool operator==(const ConferenceConfig&, const ConferenceConfig&) = default;
};

struct Conference {
  std::string taxonomy_ref;
  ConferenceConfig config;
  std::vector<Paper> papers;
  std::vector<Reviewer> reviewers;
  std::vector<Person> roster;
  BidMap bids;
  std::vector<ExplicitConflict> explicit_cois;

  const Person* find_person(std::string_view id) const;
  const Paper* find_paper(std::string_view id) const;
  std::vector<std::string> paper_ids() const;
  std::vector<std::string> reviewer_ids() const;

  friend bool operator==(const Conference&, const Conference&) = default;
};

/// Checks every cross-reference and invariant, throwing the first violation
/// with the offending id in the message.
void validate(const Conference& conf, const Taxonomy& taxonomy);

int effective_current_year(const ConferenceConfig& config);

/// Capacity per reviewer in matrix column order: overrides where given,
/// otherwise ceil(k * |P| / |R|).
std::vector<int> reviewer_capacities(const Conference& conf);

nlohmann::json to_json(const Conference& conf);
Conference conference_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ConferenceConfig& config);
ConferenceConfig config_from_json(const nlohmann::json& j);

}  // namespace confassign
