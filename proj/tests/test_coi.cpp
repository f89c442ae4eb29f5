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

#include "confassign/bibliography.hpp"
#include "confassign/coi.hpp"
#include "confassign/names.hpp"
#include "test_support.hpp"

using namespace confassign;
using confassign::testing::fixture_text;

namespace {

Conference fixture_conference() {
  return conference_from_json(nlohmann::json::parse(fixture_text("conference.json")));
}

// One paper by `author`, one reviewer.
Conference pair_conference(Person author, Person reviewer) {
  Conference c;
  c.papers.push_back({"p", "", {author.id}, {"CS"}});
  c.reviewers.push_back({reviewer.id, {}});
  c.roster = {std::move(author), std::move(reviewer)};
  return c;
}

}  // namespace

TEST_CASE("name normalization") {
  CHECK(normalize_name("M\xC3\xBCller, Hans") == "hans muller");
  CHECK(normalize_name("  John    SMITH ") == "john smith");
  CHECK(fold_diacritics("Stra\xC3\x9F" "e") == "Strasse");
  CHECK(names_match("J. Smith", "John Smith"));
  CHECK(names_match("John Smith", "John Smith"));
  CHECK(names_match("Smith, John", "John Smith 0003"));
  CHECK_FALSE(names_match("Jane Smith", "Mary Smith"));
  CHECK(name_key("Wei Wang 0002").str() == "wang|w");
}

TEST_CASE("bibliography ingestion") {
  const BibCorpus c = ingest_bibliography(fixture_text("dblp.xml"));
  REQUIRE(c.records().size() == 3);
  CHECK(c.skipped() == 1);
  CHECK(c.warnings().size() == 1);
  CHECK(c.records()[0].key == "conf/isca/LiW05");
  CHECK(c.records()[0].kind == "inproceedings");
  CHECK(c.records()[1].authors[1] == "J\xC3\xB6rg M\xC3\xBCller");
  CHECK(c.records()[2].year == 2020);
  CHECK(c.records_by_author("D. Petrova").size() == 1);
  CHECK(c.records_by_author("Nobody Here").empty());

  CHECK(ingest_bibliography("<dblp/>").records().empty());
  CHECK_THROWS_AS(ingest_bibliography(""), Error);
  CHECK_THROWS_AS(ingest_bibliography("<dblp><article>"), Error);
  CHECK_THROWS_AS(ingest_bibliography("<bib/>"), Error);
}

TEST_CASE("bibliography duplicates and round trip") {
  const BibCorpus c = ingest_bibliography(
      "<dblp><article key=\"k\"><author>A B</author><title>old</title><year>2001</year></article>"
      "<article key=\"k\"><author>A B</author><title>new</title><year>2002</year></article></dblp>");
  REQUIRE(c.records().size() == 1);
  CHECK(c.records()[0].title == "new");
  CHECK(c.warnings().size() == 1);

  const BibCorpus f = ingest_bibliography(fixture_text("dblp.xml"));
  const BibCorpus back = ingest_bibliography(f.to_xml());
  CHECK(back.records() == f.records());
  CHECK(back.skipped() == 0);
}

TEST_CASE("explicit and country conflicts") {
  Person a{"a", "A", "a@x.org", "BG", ""};
  Person r{"r", "R", "r@y.org", "BG", ""};
  CHECK(detect_same_country(pair_conference(a, r), false).empty());
  CHECK(detect_same_country(pair_conference(a, r), true).size() == 1);
  r.country = "DE";
  CHECK(detect_same_country(pair_conference(a, r), true).empty());

  Conference c = pair_conference(a, r);
  c.explicit_cois.push_back({"p", "r", ""});
  const auto e = explicit_conflicts(c);
  REQUIRE(e.size() == 1);
  CHECK(e.begin()->reason == CoIReason::kExplicit);
  CHECK_FALSE(e.begin()->evidence.empty());
}

TEST_CASE("institution conflicts") {
  CHECK(normalize_affiliation("University of Ruse") == normalize_affiliation("Ruse University"));
  CHECK(registrable_domain("a@cs.uni-x.edu") == "uni-x.edu");
  CHECK(registrable_domain("b@ee.uni-x.edu") == "uni-x.edu");
  CHECK(registrable_domain("c@cs.ox.ac.uk") == "ox.ac.uk");
  CHECK(is_public_mail_provider("gmail.com"));

  CHECK(detect_same_institution(pair_conference({"a", "A", "a@one.org", "", "University of Ruse"},
                                                {"r", "R", "r@two.org", "", "Ruse University"}))
            .size() == 1);
  CHECK(detect_same_institution(pair_conference({"a", "A", "a@cs.uni-x.edu", "", ""},
                                                {"r", "R", "b@ee.uni-x.edu", "", ""}))
            .size() == 1);
  CHECK(detect_same_institution(pair_conference({"a", "A", "a@gmail.com", "", ""},
                                                {"r", "R", "b@gmail.com", "", ""}))
            .empty());
}

TEST_CASE("local co-authorship distances") {
  Conference c;
  for (const char* id : {"r", "b", "a", "z"}) c.roster.push_back({id, id, std::string(id) + "@x.org", "", ""});
  c.reviewers.push_back({"r", {}});
  SUBCASE("distance 1") {
    c.papers.push_back({"S", "", {"r", "a"}, {"CS"}});
    c.papers.push_back({"X", "", {"a"}, {"CS"}});
    const auto out = detect_local_coauthorship(c);
    CHECK(out.count({"X", "r", CoIReason::kCoAuthorLocal, ""}) == 1);
    CHECK(out.count({"S", "r", CoIReason::kCoAuthorLocal, ""}) == 1);
  }
  SUBCASE("distance 2") {
    c.papers.push_back({"S1", "", {"r", "b"}, {"CS"}});
    c.papers.push_back({"S2", "", {"b", "a"}, {"CS"}});
    c.papers.push_back({"X", "", {"a"}, {"CS"}});
    const auto out = detect_local_coauthorship(c);
    CHECK(out.count({"X", "r", CoIReason::kCoAuthorOfCoAuthor, ""}) == 1);
    CHECK(out.count({"X", "r", CoIReason::kCoAuthorLocal, ""}) == 0);
    CHECK(out.count({"S2", "r", CoIReason::kCoAuthorLocal, ""}) == 1);
    CHECK(out.count({"S2", "r", CoIReason::kCoAuthorOfCoAuthor, ""}) == 0);
  }
  SUBCASE("disconnected reviewer") {
    c.papers.push_back({"X", "", {"a", "z"}, {"CS"}});
    CHECK(detect_local_coauthorship(c).empty());
  }
}

TEST_CASE("historical co-authorship") {
  const BibCorpus corpus = ingest_bibliography(
      "<dblp><article key=\"journals/x/SmithD09\"><author>Ann Smith</author>"
      "<author>Dan Doe</author><title>T</title><year>2009</year></article></dblp>");
  const Conference c = pair_conference({"a", "Ann Smith", "a@x.org", "", ""},
                                       {"r", "D. Doe", "r@y.org", "", ""});
  const auto out = detect_historical_coauthorship(corpus, c, 10, 2012);
  REQUIRE(out.size() == 1);
  CHECK(out.begin()->reason == CoIReason::kHistoricalCoAuthor);
  CHECK(out.begin()->evidence == "journals/x/SmithD09");
  CHECK(detect_historical_coauthorship(corpus, c, 2, 2012).empty());
  const Conference absent = pair_conference({"a", "Ann Smith", "a@x.org", "", ""},
                                            {"r", "Quinn Zed", "r@y.org", "", ""});
  CHECK(detect_historical_coauthorship(corpus, absent, 10, 2012).empty());
}

TEST_CASE("fixture conference conflicts") {
  const Conference c = fixture_conference();
  const BibCorpus corpus = ingest_bibliography(fixture_text("dblp.xml"));
  const CoISet all = detect_all(c, &corpus);
  const CoISet expected{{"p2", "r1", CoIReason::kHistoricalCoAuthor, "journals/dlib/PetrovaJ20"},
                        {"p3", "r3", CoIReason::kExplicit, "declared by author"}};
  CHECK(all == expected);
  for (const auto& rec : all) CHECK_FALSE(rec.evidence.empty());
  // Without the corpus the historical record disappears.
  CHECK(detect_all(c, nullptr).size() == 1);
}

TEST_CASE("adding a record never removes a conflict") {
  std::mt19937 rng(23);
  const std::vector<std::string> names{"Ann Smith", "Bo Li", "Cy Ng", "Di Wu", "Ed Ray", "Flo Kim"};
  Conference c;
  for (std::size_t i = 0; i < names.size(); ++i) {
    c.roster.push_back({"u" + std::to_string(i), names[i], "u" + std::to_string(i) + "@x.org", "", ""});
  }
  for (int i = 0; i < 3; ++i) c.papers.push_back({"p" + std::to_string(i), "", {"u" + std::to_string(i)}, {"CS"}});
  for (int j = 3; j < 6; ++j) c.reviewers.push_back({"u" + std::to_string(j), {}});

  std::string doc = "<dblp>";
  CoISet prev;
  for (int n = 0; n < 20; ++n) {
    const auto& x = names[rng() % names.size()];
    const auto& y = names[rng() % names.size()];
    doc += "<article key=\"k" + std::to_string(n) + "\"><author>" + x + "</author><author>" + y +
           "</author><title>t</title><year>" + std::to_string(2000 + rng() % 20) + "</year></article>";
    const CoISet now = detect_historical_coauthorship(ingest_bibliography(doc + "</dblp>"), c, 10, 2020);
    for (const auto& rec : prev) CHECK(now.count(rec) == 1);
    prev = now;
  }
}
