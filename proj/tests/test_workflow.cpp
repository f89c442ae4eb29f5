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

#include "confassign/workflow.hpp"
#include "test_support.hpp"

using namespace confassign;
using confassign::testing::fixture_text;
using nlohmann::json;

namespace {

struct Fixture {
  std::shared_ptr<const Taxonomy> taxonomy =
      std::make_shared<const Taxonomy>(confassign::testing::fixture_taxonomy());
  std::shared_ptr<const BibCorpus> corpus =
      std::make_shared<const BibCorpus>(ingest_bibliography(fixture_text("dblp.xml")));
  std::int64_t now = 1'700'000'000'000;

  WorkflowState initial() const {
    WorkflowState s;
    s.conference = conference_from_json(json::parse(fixture_text("conference.json")));
    return s;
  }

  Workflow make(WorkflowState s) {
    return Workflow(std::move(s), taxonomy, corpus, [this] { return now += 1000; });
  }
  Workflow make() { return make(initial()); }
};

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::kIoError;
}

bool has_pending(const WorkflowState& s) {
  if (!s.proposal) return false;
  return std::any_of(s.proposal->edges.begin(), s.proposal->edges.end(),
                     [](const AssignmentEdge& e) { return e.approval == Approval::kPending; });
}

}  // namespace

TEST_CASE("pipeline builds the hand-computed fixture matrix") {
  Fixture f;
  Workflow w = f.make();
  CHECK(w.stage() == Stage::kDraft);
  const SimilarityMatrix& m = w.run_pipeline("chair");
  CHECK(w.stage() == Stage::kMatrixBuilt);

  // Fixture depths: CS 0, SW 1, IS 2, PL 2, CMS 3, DL 3, HW 1.
  const double cms_is = 2.0 * 2 / (3 + 2);
  const double cms_dl = 2.0 * 2 / (3 + 3);
  const double cms_pl = 2.0 * 1 / (3 + 2);
  struct Cell {
    const char* p;
    const char* r;
    double value;
    Provenance prov;
  };
  const Cell expected[] = {
      {"p1", "r1", cms_is * 1.0, Provenance::kComputed},
      {"p1", "r2", 0.9, Provenance::kBid},
      {"p1", "r3", 1.0 * 0.5, Provenance::kComputed},
      {"p2", "r1", 0.0, Provenance::kConflict},
      {"p2", "r2", (1.0 * 1.0 + 1.0 * 0.75) / 2, Provenance::kComputed},
      {"p2", "r3", (cms_dl * 0.5 + cms_pl * 0.5) / 2, Provenance::kComputed},
      {"p3", "r1", 0.0, Provenance::kComputed},
      {"p3", "r2", 0.0, Provenance::kComputed},
      {"p3", "r3", 0.0, Provenance::kConflict},
  };
  for (const auto& c : expected) {
    CAPTURE(c.p);
    CAPTURE(c.r);
    const auto i = m.paper_index(c.p);
    const auto j = m.reviewer_index(c.r);
    CHECK(m.factor(i, j) == doctest::Approx(c.value).epsilon(1e-12));
    CHECK(m.provenance(i, j) == c.prov);
  }
  CHECK(w.state().conflicts.size() == 2);
  REQUIRE(w.state().audit.size() == 1);
  CHECK(w.state().audit[0].action == "build-matrix");
}

TEST_CASE("stage guards") {
  Fixture f;
  Workflow w = f.make();
  CHECK(code_of([&] { w.propose("chair"); }) == ErrorCode::kIllegalState);
  CHECK(code_of([&] { w.approve(std::nullopt, "chair"); }) == ErrorCode::kIllegalState);
  CHECK(code_of([&] { w.manual_assign("p1", "r1", false, "chair"); }) == ErrorCode::kIllegalState);
  CHECK(code_of([&] { w.what_if({}, {}); }) == ErrorCode::kIllegalState);
  CHECK(w.state().audit.empty());
}

TEST_CASE("propose and approve") {
  Fixture f;
  Workflow w = f.make();
  w.run_pipeline("chair");
  const AssignmentProposal& p = w.propose("chair");
  CHECK(w.stage() == Stage::kProposed);
  REQUIRE(p.edges.size() == 6);
  for (const auto* pair : {"p1:r2", "p1:r1", "p2:r2", "p2:r3", "p3:r1", "p3:r2"}) {
    const std::string s(pair);
    CHECK(p.find(s.substr(0, 2), s.substr(3)) != nullptr);
  }
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    CHECK(p.edges[i].id == static_cast<int>(i));
    CHECK(p.edges[i].approval == Approval::kPending);
  }
  CHECK(w.approve(std::vector<int>{0}, "chair") == Stage::kPartiallyApproved);
  CHECK(code_of([&] { w.approve(std::vector<int>{99}, "chair"); }) == ErrorCode::kUnknownEdge);
  CHECK(w.approve(std::nullopt, "chair") == Stage::kApproved);
  CHECK_FALSE(has_pending(w.state()));
  CHECK(code_of([&] { w.approve(std::nullopt, "chair"); }) == ErrorCode::kIllegalState);

  // Re-proposing clears approvals and issues fresh edge ids.
  w.propose("chair");
  CHECK(w.stage() == Stage::kProposed);
  CHECK(w.state().proposal->edges.front().id == 6);
  CHECK(has_pending(w.state()));
}

TEST_CASE("manual edits") {
  Fixture f;
  Workflow w = f.make();
  w.run_pipeline("chair");
  w.propose("chair");

  const AssignmentEdge e = w.manual_assign("p1", "r3", false, "chair");
  CHECK(e.origin == EdgeOrigin::kManual);
  CHECK(e.approval == Approval::kApproved);
  CHECK(e.factor == 0.5);
  CHECK(w.stage() == Stage::kPartiallyApproved);
  CHECK(code_of([&] { w.manual_assign("p1", "r3", false, "chair"); }) == ErrorCode::kDuplicateEdge);
  CHECK(code_of([&] { w.manual_assign("p2", "r1", false, "chair"); }) ==
        ErrorCode::kConflictRequiresForce);
  CHECK(code_of([&] { w.manual_assign("p9", "r1", false, "chair"); }) == ErrorCode::kUnknownPaper);

  const auto before = w.state().audit.size();
  w.manual_assign("p2", "r1", true, "chair");
  REQUIRE(w.state().audit.size() == before + 1);
  const AuditEvent& ev = w.state().audit.back();
  CHECK(ev.action == "assign");
  CHECK(ev.payload.at("force") == true);
  CHECK(ev.payload.at("conflict_override") == true);

  w.manual_unassign("p1", "r3", "chair");
  CHECK(w.state().proposal->find("p1", "r3") == nullptr);
  CHECK(code_of([&] { w.manual_unassign("p1", "r3", "chair"); }) == ErrorCode::kUnknownEdge);

  w.manual_unassign("p3", "r2", "chair");
  const auto status = w.status();
  REQUIRE(status.warnings.size() == 1);
  CHECK(status.warnings[0].find("p3") != std::string::npos);

  // Unassigned pairs are not excluded from the next proposal.
  w.propose("chair");
  CHECK(w.state().proposal->find("p3", "r2") != nullptr);
}

TEST_CASE("capacity override") {
  Fixture f;
  WorkflowState s = f.initial();
  s.conference.config.capacities["r3"] = 1;
  Workflow w = f.make(s);
  w.run_pipeline("chair");
  w.propose("chair");
  REQUIRE(w.state().proposal->find("p2", "r3") != nullptr);
  CHECK(code_of([&] { w.manual_assign("p1", "r3", false, "chair"); }) ==
        ErrorCode::kCapacityRequiresForce);
  w.manual_assign("p1", "r3", true, "chair");
  CHECK(w.state().audit.back().payload.at("capacity_override") == true);
}

TEST_CASE("what-if leaves the state alone") {
  Fixture f;
  Workflow w = f.make();
  w.run_pipeline("chair");
  const auto hash = w.state_hash();
  const AssignmentProposal free = w.what_if({}, {});
  CHECK(w.state_hash() == hash);
  const AssignmentProposal pinned = w.what_if({{"p1", "r3"}}, {});
  CHECK(pinned.find("p1", "r3") != nullptr);
  const AssignmentProposal forbidden = w.what_if({}, {{"p1", "r2"}});
  CHECK(forbidden.find("p1", "r2") == nullptr);
  const auto& m = *w.state().matrix;
  CHECK(score_proposal(forbidden, m).total_weight <= score_proposal(free, m).total_weight);
  CHECK(w.state_hash() == hash);

  CHECK(w.propose("chair") == free);
}

TEST_CASE("document round trip and errors") {
  Fixture f;
  Workflow w = f.make();
  w.run_pipeline("chair");
  w.propose("chair");
  w.approve(std::vector<int>{1, 2}, "chair");
  w.manual_assign("p2", "r1", true, "chair");
  const std::string doc = save_document(w.state());
  const WorkflowState back = load_document(doc);
  CHECK(back == w.state());
  CHECK(save_document(back) == doc);

  CHECK(code_of([&] { load_document(doc.substr(0, doc.size() / 2)); }) ==
        ErrorCode::kMalformedDocument);
  CHECK(code_of([&] { load_document(""); }) == ErrorCode::kMalformedDocument);
  json j = json::parse(doc);
  j["version"] = 2;
  CHECK(code_of([&] { load_document(j.dump()); }) == ErrorCode::kSchemaVersionMismatch);
  j = json::parse(doc);
  j.erase("version");
  CHECK(code_of([&] { load_document(j.dump()); }) == ErrorCode::kMalformedDocument);
  j = json::parse(doc);
  j["matrix"]["factors"][0].erase(0);
  CHECK(code_of([&] { load_document(j.dump()); }) == ErrorCode::kMalformedDocument);
  j = json::parse(doc);
  j["proposal"]["edges"][0]["approval"] = "Maybe";
  CHECK(code_of([&] { load_document(j.dump()); }) == ErrorCode::kMalformedDocument);
}

TEST_CASE("audit log is monotone and replays to the same state") {
  Fixture f;
  Workflow w = f.make();
  w.run_pipeline("chair");
  w.propose("chair");
  w.approve(std::vector<int>{0, 3}, "alice");
  w.manual_assign("p2", "r1", true, "bob");
  w.manual_unassign("p3", "r1", "bob");
  w.approve(std::nullopt, "alice");
  const auto& audit = w.state().audit;
  CHECK(audit.size() == 6);
  for (std::size_t i = 1; i < audit.size(); ++i) CHECK(audit[i].timestamp >= audit[i - 1].timestamp);
  CHECK(Workflow::replay(w.state().initial(), audit, f.taxonomy, f.corpus) == w.state());

  std::istringstream lines(audit_jsonl(audit));
  std::string line;
  int n = 0;
  while (std::getline(lines, line)) {
    CHECK(json::parse(line).at("actor").is_string());
    ++n;
  }
  CHECK(n == 6);
}

TEST_CASE("clock going backwards does not break monotonicity") {
  Fixture f;
  std::int64_t t = 5000;
  Workflow w(f.initial(), f.taxonomy, f.corpus, [&t] { return t -= 1000; });
  w.run_pipeline("chair");
  w.propose("chair");
  CHECK(w.state().audit[1].timestamp == w.state().audit[0].timestamp);
}
