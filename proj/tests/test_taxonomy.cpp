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

#include "confassign/error.hpp"
#include "confassign/taxonomy.hpp"
#include "test_support.hpp"

using namespace confassign;
using confassign::testing::fixture_taxonomy;

namespace {

ErrorCode code_of(std::string_view xml) {
  try {
    Taxonomy::from_xml(xml);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::kIoError;
}

}  // namespace

TEST_CASE("fixture taxonomy structure") {
  const Taxonomy t = fixture_taxonomy();
  CHECK(t.size() == 7);
  CHECK(t.root() == "CS");
  CHECK(t.depth("CS") == 0);
  CHECK(t.depth("IS") == 2);
  CHECK(t.depth("DL") == 3);
  CHECK(t.max_depth() == 3);
  CHECK(t.children("IS") == std::vector<KeywordId>{"CMS", "DL"});
  CHECK(t.parent("PL") == std::optional<KeywordId>("SW"));
  CHECK_FALSE(t.parent("CS").has_value());
  CHECK(t.node("CMS").label == "Content Management Systems");
  CHECK(t.is_parent_of("IS", "DL"));
  CHECK_FALSE(t.is_parent_of("SW", "DL"));
}

TEST_CASE("lowest common ancestor") {
  const Taxonomy t = fixture_taxonomy();
  CHECK(t.lca("CMS", "DL") == "IS");
  CHECK(t.lca("CMS", "PL") == "SW");
  CHECK(t.lca("DL", "HW") == "CS");
  CHECK(t.lca("IS", "CMS") == "IS");
  CHECK(t.lca("PL", "PL") == "PL");
  CHECK_THROWS_AS(t.lca("PL", "nope"), Error);
}

TEST_CASE("xml round trip is lossless") {
  const Taxonomy t = fixture_taxonomy();
  const Taxonomy back = Taxonomy::from_xml(t.to_xml());
  CHECK(back == t);
  CHECK(back.to_xml() == t.to_xml());
}

TEST_CASE("escaped labels survive a round trip") {
  const Taxonomy t = Taxonomy::from_xml(
      "<taxonomy><node id=\"r\" label=\"R &amp; D &lt;core&gt;\">"
      "<node id=\"c\" label=\"Caf&eacute; &#233;\"/></node></taxonomy>");
  CHECK(t.node("r").label == "R & D <core>");
  CHECK(t.node("c").label == "Caf\xC3\xA9 \xC3\xA9");
  CHECK(Taxonomy::from_xml(t.to_xml()) == t);
}

TEST_CASE("malformed taxonomies are rejected with specific codes") {
  CHECK(code_of("<taxonomy><node id=\"a\" label=\"A\">") == ErrorCode::kMalformedXml);
  CHECK(code_of("") == ErrorCode::kEmptyDocument);
  CHECK(code_of("<taxonomy/>") == ErrorCode::kEmptyDocument);
  CHECK(code_of("<taxonomy><node id=\"a\" label=\"A\"/><node id=\"b\" label=\"B\"/></taxonomy>") ==
        ErrorCode::kMultipleRoots);
  CHECK(code_of("<taxonomy><node id=\"a\" label=\"A\"><node id=\"a\" label=\"again\"/></node>"
                "</taxonomy>") == ErrorCode::kDuplicateId);
  CHECK(code_of("<taxonomy><node label=\"A\"/></taxonomy>") == ErrorCode::kMalformedXml);
  CHECK(code_of("<taxonomy><node id=\"a\" label=\"A\"><leaf/></node></taxonomy>") ==
        ErrorCode::kMalformedXml);
  CHECK(code_of("<other><node id=\"a\" label=\"A\"/></other>") == ErrorCode::kMalformedXml);
}

TEST_CASE("from_parents validates the tree") {
  using S = Taxonomy::NodeSpec;
  const Taxonomy t = Taxonomy::from_parents({S{"b", "B", "a"}, S{"a", "A", std::nullopt}});
  CHECK(t.root() == "a");
  CHECK(t.depth("b") == 1);
  CHECK_THROWS_AS(Taxonomy::from_parents({}), Error);
  CHECK_THROWS_AS(Taxonomy::from_parents({S{"a", "A", "zz"}}), Error);
  CHECK_THROWS_AS(Taxonomy::from_parents({S{"a", "A", std::nullopt}, S{"b", "B", std::nullopt}}),
                  Error);
  CHECK_THROWS_AS(Taxonomy::from_parents({S{"a", "A", std::nullopt}, S{"b", "B", "c"},
                                          S{"c", "C", "b"}}),
                  Error);
}

TEST_CASE("random trees: depth agrees with parent chain") {
  std::mt19937 rng(7);
  for (int round = 0; round < 50; ++round) {
    const Taxonomy t = confassign::testing::random_tree(rng, 1 + round % 30);
    for (const auto& n : t.nodes()) {
      int hops = 0;
      for (auto p = t.parent(n.id); p; p = t.parent(*p)) ++hops;
      CHECK(t.depth(n.id) == hops);
    }
    CHECK(Taxonomy::from_xml(t.to_xml()) == t);
  }
}
