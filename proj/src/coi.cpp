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

#include "confassign/coi.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <deque>
#include <map>
#include <vector>

#include "confassign/names.hpp"

namespace confassign {

std::string_view to_string(CoIReason reason) {
  switch (reason) {
    case CoIReason::kExplicit: return "Explicit";
    case CoIReason::kSameCountry: return "SameCountry";
    case CoIReason::kSameInstitution: return "SameInstitution";
    case CoIReason::kCoAuthorLocal: return "CoAuthorLocal";
    case CoIReason::kCoAuthorOfCoAuthor: return "CoAuthorOfCoAuthor";
    case CoIReason::kHistoricalCoAuthor: return "HistoricalCoAuthor";
  }
  return "Explicit";
}

std::optional<CoIReason> parse_coi_reason(std::string_view text) {
  for (auto r : {CoIReason::kExplicit, CoIReason::kSameCountry, CoIReason::kSameInstitution,
                 CoIReason::kCoAuthorLocal, CoIReason::kCoAuthorOfCoAuthor,
                 CoIReason::kHistoricalCoAuthor}) {
    if (to_string(r) == text) return r;
  }
  return std::nullopt;
}

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

CoISet explicit_conflicts(const Conference& conf) {
  CoISet out;
  for (const auto& c : conf.explicit_cois) {
    out.insert({c.paper_id, c.reviewer_id, CoIReason::kExplicit,
                c.evidence.empty() ? "declared" : c.evidence});
  }
  return out;
}

CoISet detect_same_country(const Conference& conf, bool enabled) {
  CoISet out;
  if (!enabled) return out;
  for (const auto& paper : conf.papers) {
    for (const auto& reviewer : conf.reviewers) {
      const Person* r = conf.find_person(reviewer.person_id);
      if (r == nullptr || r->country.empty()) continue;
      for (const auto& author_id : paper.author_ids) {
        const Person* a = conf.find_person(author_id);
        if (a != nullptr && lower(a->country) == lower(r->country)) {
          out.insert({paper.id, reviewer.person_id, CoIReason::kSameCountry,
                      "country " + r->country + " shared with author " + author_id});
          break;
        }
      }
    }
  }
  return out;
}

std::string normalize_affiliation(std::string_view affiliation) {
  static constexpr std::array<std::string_view, 6> kStopTokens = {
      "university", "institute", "dept", "department", "of", "the"};
  std::string text = lower(fold_diacritics(affiliation));
  for (auto& c : text) {
    if (!std::isalnum(static_cast<unsigned char>(c))) c = ' ';
  }
  std::vector<std::string> tokens;
  std::string current;
  for (char c : text + " ") {
    if (c == ' ') {
      if (!current.empty() &&
          std::find(kStopTokens.begin(), kStopTokens.end(), current) == kStopTokens.end()) {
        tokens.push_back(current);
      }
      current.clear();
    } else {
      current += c;
    }
  }
  std::sort(tokens.begin(), tokens.end());
  tokens.erase(std::unique(tokens.begin(), tokens.end()), tokens.end());
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) out += ' ';
    out += t;
  }
  return out;
}

std::string registrable_domain(std::string_view email) {
  const auto at = email.find('@');
  if (at == std::string_view::npos) return {};
  const std::string domain = lower(email.substr(at + 1));
  std::vector<std::string> labels;
  std::size_t start = 0;
  while (start <= domain.size()) {
    const auto dot = domain.find('.', start);
    const auto end = dot == std::string::npos ? domain.size() : dot;
    if (end > start) labels.push_back(domain.substr(start, end - start));
    if (dot == std::string::npos) break;
    start = dot + 1;
  }
  if (labels.size() <= 2) {
    std::string out;
    for (const auto& l : labels) out += (out.empty() ? "" : ".") + l;
    return out;
  }
  static constexpr std::array<std::string_view, 10> kGenericSecondLevel = {
      "co", "ac", "com", "edu", "gov", "org", "net", "or", "ne", "go"};
  const auto n = labels.size();
  const bool country_tld = labels[n - 1].size() == 2;
  const bool generic_sld = std::find(kGenericSecondLevel.begin(), kGenericSecondLevel.end(),
                                     labels[n - 2]) != kGenericSecondLevel.end();
  if (country_tld && generic_sld) return labels[n - 3] + "." + labels[n - 2] + "." + labels[n - 1];
  return labels[n - 2] + "." + labels[n - 1];
}

bool is_public_mail_provider(std::string_view domain) {
  static constexpr std::array<std::string_view, 6> kProviders = {
      "gmail.com", "yahoo.com", "hotmail.com", "outlook.com", "mail.com", "protonmail.com"};
  return std::find(kProviders.begin(), kProviders.end(), domain) != kProviders.end();
}

CoISet detect_same_institution(const Conference& conf) {
  CoISet out;
  for (const auto& paper : conf.papers) {
    for (const auto& reviewer : conf.reviewers) {
      const Person* r = conf.find_person(reviewer.person_id);
      if (r == nullptr) continue;
      const std::string r_aff = normalize_affiliation(r->affiliation);
      const std::string r_dom = registrable_domain(r->email);
      for (const auto& author_id : paper.author_ids) {
        const Person* a = conf.find_person(author_id);
        if (a == nullptr) continue;
        std::string evidence;
        if (!r_aff.empty() && r_aff == normalize_affiliation(a->affiliation)) {
          evidence = "affiliation '" + a->affiliation + "' matches '" + r->affiliation + "'";
        } else if (!r_dom.empty() && !is_public_mail_provider(r_dom) &&
                   r_dom == registrable_domain(a->email)) {
          evidence = "email domain " + r_dom + " shared with author " + author_id;
        }
        if (!evidence.empty()) {
          out.insert({paper.id, reviewer.person_id, CoIReason::kSameInstitution, evidence});
          break;
        }
      }
    }
  }
  return out;
}

CoISet detect_local_coauthorship(const Conference& conf) {
  // Co-author adjacency; each edge remembers one submission that created it.
  std::map<std::string, std::map<std::string, std::string>> adjacency;
  for (const auto& paper : conf.papers) {
    for (const auto& a : paper.author_ids) {
      for (const auto& b : paper.author_ids) {
        if (a != b) adjacency[a].try_emplace(b, paper.id);
      }
    }
  }

  CoISet out;
  for (const auto& reviewer : conf.reviewers) {
    const std::string& r = reviewer.person_id;
    // Breadth-first search to depth 2; `via` records the intermediary.
    std::map<std::string, int> dist{{r, 0}};
    std::map<std::string, std::string> via;
    std::deque<std::string> queue{r};
    while (!queue.empty()) {
      const std::string u = queue.front();
      queue.pop_front();
      if (dist[u] == 2) continue;
      const auto it = adjacency.find(u);
      if (it == adjacency.end()) continue;
      for (const auto& [v, _] : it->second) {
        if (dist.count(v)) continue;
        dist[v] = dist[u] + 1;
        via[v] = u;
        queue.push_back(v);
      }
    }

    for (const auto& paper : conf.papers) {
      int best = 3;
      std::string closest;
      for (const auto& a : paper.author_ids) {
        const auto it = dist.find(a);
        if (it != dist.end() && it->second < best) {
          best = it->second;
          closest = a;
        }
      }
      if (best == 0) {
        out.insert({paper.id, r, CoIReason::kCoAuthorLocal, "reviewer is an author of " + paper.id});
      } else if (best == 1) {
        out.insert({paper.id, r, CoIReason::kCoAuthorLocal,
                    "co-authored " + adjacency[r][closest] + " with " + closest});
      } else if (best == 2) {
        out.insert({paper.id, r, CoIReason::kCoAuthorOfCoAuthor,
                    "co-author of " + via[closest] + ", who co-authored with " + closest});
      }
    }
  }
  return out;
}

CoISet detect_historical_coauthorship(const BibCorpus& corpus, const Conference& conf,
                                      int year_window, int current_year) {
  CoISet out;
  const int earliest = current_year - year_window;
  const auto& records = corpus.records();

  for (const auto& reviewer : conf.reviewers) {
    const Person* r = conf.find_person(reviewer.person_id);
    if (r == nullptr || r->name.empty()) continue;
    const std::string r_key = name_key(r->name).str();
    for (std::size_t idx : corpus.records_by_author(r->name)) {
      const BibRecord& rec = records[idx];
      if (rec.year < earliest) continue;
      std::vector<std::string> keys;
      keys.reserve(rec.authors.size());
      for (const auto& name : rec.authors) keys.push_back(name_key(name).str());

      for (const auto& paper : conf.papers) {
        bool hit = false;
        for (const auto& author_id : paper.author_ids) {
          const Person* a = conf.find_person(author_id);
          if (a == nullptr || a->name.empty()) continue;
          const std::string a_key = name_key(a->name).str();
          for (std::size_t i = 0; i < keys.size() && !hit; ++i) {
            if (keys[i] != a_key) continue;
            for (std::size_t j = 0; j < keys.size() && !hit; ++j) {
              hit = j != i && keys[j] == r_key;
            }
          }
          if (hit) break;
        }
        if (hit) {
          out.insert({paper.id, reviewer.person_id, CoIReason::kHistoricalCoAuthor, rec.key});
        }
      }
    }
  }
  return out;
}

CoISet detect_all(const Conference& conf, const BibCorpus* corpus) {
  CoISet out = explicit_conflicts(conf);
  out.merge(detect_same_country(conf, conf.config.same_country_rule));
  out.merge(detect_same_institution(conf));
  out.merge(detect_local_coauthorship(conf));
  if (corpus != nullptr) {
    out.merge(detect_historical_coauthorship(*corpus, conf, conf.config.year_window,
                                             effective_current_year(conf.config)));
  }
  return out;
}

}  // namespace confassign
