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

#include "confassign/conference.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "confassign/error.hpp"
#include "json_util.hpp"

namespace confassign {

using nlohmann::json;
using detail::optional_field;
using detail::require;

std::string_view to_string(SolverKind kind) {
  return kind == SolverKind::kMultipass ? "multipass" : "greedy";
}

std::optional<SolverKind> parse_solver_kind(std::string_view text) {
  if (text == "multipass") return SolverKind::kMultipass;
  if (text == "greedy") return SolverKind::kGreedy;
  return std::nullopt;
}

const Person* Conference::find_person(std::string_view id) const {
  for (const auto& p : roster) {
    if (p.id == id) return &p;
  }
  return nullptr;
}

const Paper* Conference::find_paper(std::string_view id) const {
  for (const auto& p : papers) {
    if (p.id == id) return &p;
  }
  return nullptr;
}

std::vector<std::string> Conference::paper_ids() const {
  std::vector<std::string> ids;
  ids.reserve(papers.size());
  for (const auto& p : papers) ids.push_back(p.id);
  return ids;
}

std::vector<std::string> Conference::reviewer_ids() const {
  std::vector<std::string> ids;
  ids.reserve(reviewers.size());
  for (const auto& r : reviewers) ids.push_back(r.person_id);
  return ids;
}

namespace {

[[noreturn]] void invalid(const std::string& message) {
  throw Error(ErrorCode::kInvalidConference, message);
}

}  // namespace

void validate(const Conference& conf, const Taxonomy& taxonomy) {
  const auto& cfg = conf.config;
  if (cfg.k < 1) invalid("k must be at least 1");
  if (cfg.depth_threshold < 1) invalid("depth_threshold must be positive");
  if (cfg.year_window < 1) invalid("year_window must be positive");

  std::set<std::string> people;
  for (const auto& p : conf.roster) {
    if (p.id.empty()) invalid("roster entry with empty id");
    if (!people.insert(p.id).second) invalid("duplicate person '" + p.id + "'");
    if (std::count(p.email.begin(), p.email.end(), '@') != 1) {
      invalid("person '" + p.id + "' has an email without exactly one '@'");
    }
  }

  std::set<std::string> papers;
  for (const auto& paper : conf.papers) {
    if (paper.id.empty()) invalid("paper with empty id");
    if (!papers.insert(paper.id).second) invalid("duplicate paper '" + paper.id + "'");
    if (paper.author_ids.empty()) invalid("paper '" + paper.id + "' has no authors");
    for (const auto& a : paper.author_ids) {
      if (!people.count(a)) invalid("paper '" + paper.id + "' names unknown author '" + a + "'");
    }
    if (paper.keywords.empty()) {
      throw Error(ErrorCode::kEmptyPaperSet, "paper '" + paper.id + "' has no keywords");
    }
    for (const auto& kw : paper.keywords) {
      if (!taxonomy.contains(kw)) {
        throw Error(ErrorCode::kUnknownKeyword,
                    "paper '" + paper.id + "' uses unknown keyword '" + kw + "'");
      }
    }
  }

  std::set<std::string> reviewers;
  for (const auto& r : conf.reviewers) {
    if (!people.count(r.person_id)) invalid("reviewer '" + r.person_id + "' is not in the roster");
    if (!reviewers.insert(r.person_id).second) {
      invalid("duplicate reviewer '" + r.person_id + "'");
    }
    for (const auto& [kw, _] : r.selection) {
      if (!taxonomy.contains(kw)) {
        throw Error(ErrorCode::kUnknownKeyword,
                    "reviewer '" + r.person_id + "' uses unknown keyword '" + kw + "'");
      }
    }
  }

  for (const auto& [id, cap] : cfg.capacities) {
    if (!reviewers.count(id)) {
      throw Error(ErrorCode::kUnknownReviewer, "capacity for unknown reviewer '" + id + "'");
    }
    if (cap < 1) invalid("capacity of '" + id + "' must be positive");
  }

  auto check_pair = [&](const std::string& paper, const std::string& reviewer) {
    if (!papers.count(paper)) throw Error(ErrorCode::kUnknownPaper, "unknown paper '" + paper + "'");
    if (!reviewers.count(reviewer)) {
      throw Error(ErrorCode::kUnknownReviewer, "unknown reviewer '" + reviewer + "'");
    }
  };
  for (const auto& [key, _] : conf.bids) check_pair(key.first, key.second);
  for (const auto& c : conf.explicit_cois) check_pair(c.paper_id, c.reviewer_id);
}

int effective_current_year(const ConferenceConfig& config) {
  if (config.current_year > 0) return config.current_year;
  const auto today = std::chrono::year_month_day(
      std::chrono::floor<std::chrono::days>(std::chrono::system_clock::now()));
  return static_cast<int>(today.year());
}

std::vector<int> reviewer_capacities(const Conference& conf) {
  const auto n_papers = static_cast<long>(conf.papers.size());
  const auto n_reviewers = static_cast<long>(conf.reviewers.size());
  const int fallback =
      n_reviewers == 0 ? 0
                       : static_cast<int>((conf.config.k * n_papers + n_reviewers - 1) / n_reviewers);
  std::vector<int> caps;
  caps.reserve(conf.reviewers.size());
  for (const auto& r : conf.reviewers) {
    const auto it = conf.config.capacities.find(r.person_id);
    caps.push_back(it == conf.config.capacities.end() ? fallback : it->second);
  }
  return caps;
}

json to_json(const ConferenceConfig& c) {
  return json{
      {"k", c.k},
      {"capacities", c.capacities},
      {"depth_threshold", c.depth_threshold},
      {"level_weights",
       {{"High", c.level_weights.high}, {"Medium", c.level_weights.medium}, {"Low", c.level_weights.low}}},
      {"bid_mode", to_string(c.bid_mode)},
      {"same_country_rule", c.same_country_rule},
      {"year_window", c.year_window},
      {"current_year", c.current_year},
      {"reduce_paper_sets", c.reduce_paper_sets},
      {"restrict_to_closest", c.restrict_to_closest},
      {"solver", to_string(c.solver)},
      {"bibliography_ref", c.bibliography_ref},
  };
}

ConferenceConfig config_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::kMalformedDocument, "config must be an object");
  ConferenceConfig c;
  c.k = optional_field(j, "k", c.k);
  c.capacities = optional_field(j, "capacities", c.capacities);
  c.depth_threshold = optional_field(j, "depth_threshold", c.depth_threshold);
  if (j.contains("level_weights")) {
    const auto& w = j.at("level_weights");
    c.level_weights.high = optional_field(w, "High", c.level_weights.high);
    c.level_weights.medium = optional_field(w, "Medium", c.level_weights.medium);
    c.level_weights.low = optional_field(w, "Low", c.level_weights.low);
  }
  const auto mode = optional_field<std::string>(j, "bid_mode", "Static");
  const auto parsed_mode = parse_bid_mode(mode);
  if (!parsed_mode) throw Error(ErrorCode::kMalformedDocument, "unknown bid_mode '" + mode + "'");
  c.bid_mode = *parsed_mode;
  c.same_country_rule = optional_field(j, "same_country_rule", c.same_country_rule);
  c.year_window = optional_field(j, "year_window", c.year_window);
  c.current_year = optional_field(j, "current_year", c.current_year);
  c.reduce_paper_sets = optional_field(j, "reduce_paper_sets", c.reduce_paper_sets);
  c.restrict_to_closest = optional_field(j, "restrict_to_closest", c.restrict_to_closest);
  const auto solver = optional_field<std::string>(j, "solver", "multipass");
  const auto parsed_solver = parse_solver_kind(solver);
  if (!parsed_solver) throw Error(ErrorCode::kMalformedDocument, "unknown solver '" + solver + "'");
  c.solver = *parsed_solver;
  c.bibliography_ref = optional_field<std::string>(j, "bibliography_ref", "");
  return c;
}

json to_json(const Conference& conf) {
  json papers = json::array();
  for (const auto& p : conf.papers) {
    papers.push_back({{"id", p.id}, {"title", p.title}, {"author_ids", p.author_ids},
                      {"keywords", p.keywords}});
  }
  json reviewers = json::array();
  for (const auto& r : conf.reviewers) {
    json sel = json::object();
    for (const auto& [kw, entry] : r.selection) {
      if (entry.inferred) {
        sel[kw] = {{"level", to_string(entry.level)}, {"inferred", true}};
      } else {
        sel[kw] = to_string(entry.level);
      }
    }
    reviewers.push_back({{"person_id", r.person_id}, {"selection", sel}});
  }
  json roster = json::array();
  for (const auto& p : conf.roster) {
    roster.push_back({{"id", p.id}, {"name", p.name}, {"email", p.email},
                      {"country", p.country}, {"affiliation", p.affiliation}});
  }
  json bids = json::array();
  for (const auto& [key, level] : conf.bids) {
    bids.push_back({{"paper_id", key.first}, {"reviewer_id", key.second}, {"level", to_string(level)}});
  }
  json cois = json::array();
  for (const auto& c : conf.explicit_cois) {
    cois.push_back({{"paper_id", c.paper_id}, {"reviewer_id", c.reviewer_id}, {"evidence", c.evidence}});
  }
  return json{{"taxonomy_ref", conf.taxonomy_ref}, {"config", to_json(conf.config)},
              {"papers", papers}, {"reviewers", reviewers}, {"roster", roster},
              {"bids", bids}, {"explicit_cois", cois}};
}

Conference conference_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::kMalformedDocument, "conference must be an object");
  Conference conf;
  conf.taxonomy_ref = optional_field<std::string>(j, "taxonomy_ref", "");
  if (j.contains("config")) conf.config = config_from_json(j.at("config"));

  for (const auto& p : optional_field(j, "papers", json::array())) {
    conf.papers.push_back({require<std::string>(p, "id"), optional_field<std::string>(p, "title", ""),
                           require<std::vector<std::string>>(p, "author_ids"),
                           require<PaperKeywordSet>(p, "keywords")});
  }
  for (const auto& r : optional_field(j, "reviewers", json::array())) {
    Reviewer reviewer{require<std::string>(r, "person_id"), {}};
    const json selection = optional_field(r, "selection", json::object());
    for (const auto& [kw, value] : selection.items()) {
      SelectionEntry entry;
      std::string level;
      if (value.is_string()) {
        level = value.get<std::string>();
      } else {
        level = require<std::string>(value, "level");
        entry.inferred = optional_field(value, "inferred", false);
      }
      const auto parsed = parse_competence_level(level);
      if (!parsed) throw Error(ErrorCode::kMalformedDocument, "unknown competence level '" + level + "'");
      entry.level = *parsed;
      reviewer.selection.emplace(kw, entry);
    }
    conf.reviewers.push_back(std::move(reviewer));
  }
  for (const auto& p : optional_field(j, "roster", json::array())) {
    conf.roster.push_back({require<std::string>(p, "id"), optional_field<std::string>(p, "name", ""),
                           require<std::string>(p, "email"),
                           optional_field<std::string>(p, "country", ""),
                           optional_field<std::string>(p, "affiliation", "")});
  }
  for (const auto& b : optional_field(j, "bids", json::array())) {
    const auto level = require<std::string>(b, "level");
    const auto parsed = parse_bid_level(level);
    if (!parsed) throw Error(ErrorCode::kMalformedDocument, "unknown bid level '" + level + "'");
    PairKey key{require<std::string>(b, "paper_id"), require<std::string>(b, "reviewer_id")};
    if (!conf.bids.emplace(key, *parsed).second) {
      throw Error(ErrorCode::kInvalidConference,
                  "more than one bid for (" + key.first + ", " + key.second + ")");
    }
  }
  for (const auto& c : optional_field(j, "explicit_cois", json::array())) {
    conf.explicit_cois.push_back({require<std::string>(c, "paper_id"),
                                  require<std::string>(c, "reviewer_id"),
                                  optional_field<std::string>(c, "evidence", "declared")});
  }
  return conf;
}

}  // namespace confassign
