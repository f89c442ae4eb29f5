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

#include <set>
#include <string>
#include <string_view>
#include <tuple>

#include "confassign/bibliography.hpp"
#include "confassign/conference.hpp"

namespace confassign {

enum class CoIReason {
  kExplicit,
  kSameCountry,
  kSameInstitution,
  kCoAuthorLocal,
  kCoAuthorOfCoAuthor,
  kHistoricalCoAuthor,
};

std::string_view to_string(CoIReason reason);
std::optional<CoIReason> parse_coi_reason(std::string_view text);

// Records are identified by (paper, reviewer, reason); evidence is carried
// along for the chair but does not take part in ordering.
struct CoIRecord {
  std::string paper_id;
  std::string reviewer_id;
  CoIReason reason = CoIReason::kExplicit;
  std::string evidence;

  friend bool operator<(const CoIRecord& a, const CoIRecord& b) {
    return std::tie(a.paper_id, a.reviewer_id, a.reason) <
           std::tie(b.paper_id, b.reviewer_id, b.reason);
  }
  friend bool operator==(const CoIRecord&, const CoIRecord&) = default;
};

using CoISet = std::set<CoIRecord>;

CoISet explicit_conflicts(const Conference& conf);

CoISet detect_same_country(const Conference& conf, bool enabled);

// Affiliation normalization: ASCII-folded, lowercased, punctuation dropped,
// the tokens {university, institute, dept, department, of, the} removed,
// remaining tokens sorted and de-duplicated.
std::string normalize_affiliation(std::string_view affiliation);

// "a@cs.uni-x.edu" -> "uni-x.edu"; keeps three labels for two-letter
// country domains with a generic second level ("x.ac.uk").
std::string registrable_domain(std::string_view email);

bool is_public_mail_provider(std::string_view domain);

CoISet detect_same_institution(const Conference& conf);

/// Distance 0 or 1 in the co-authorship graph of current submissions is
/// CoAuthorLocal; distance 2 is CoAuthorOfCoAuthor.
CoISet detect_local_coauthorship(const Conference& conf);

CoISet detect_historical_coauthorship(const BibCorpus& corpus, const Conference& conf,
                                      int year_window, int current_year);

/// Explicit declarations plus every enabled detector, merged.
CoISet detect_all(const Conference& conf, const BibCorpus* corpus);

}  // namespace confassign
