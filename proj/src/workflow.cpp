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

#include "confassign/workflow.hpp"

#include <algorithm>
#include <chrono>
#include <map>

#include "confassign/matrix_builder.hpp"
#include "json_util.hpp"

namespace confassign {

using nlohmann::json;
using detail::optional_field;
using detail::require;

std::string_view to_string(Stage s) {
  switch (s) {
    case Stage::kDraft: return "Draft";
    case Stage::kMatrixBuilt: return "MatrixBuilt";
    case Stage::kProposed: return "Proposed";
    case Stage::kPartiallyApproved: return "PartiallyApproved";
    case Stage::kApproved: return "Approved";
  }
  return "Draft";
}

std::optional<Stage> parse_stage(std::string_view text) {
  for (auto s : {Stage::kDraft, Stage::kMatrixBuilt, Stage::kProposed,
                 Stage::kPartiallyApproved, Stage::kApproved}) {
    if (to_string(s) == text) return s;
  }
  return std::nullopt;
}

WorkflowState WorkflowState::initial() const {
  WorkflowState s;
  s.conference = conference;
  return s;
}

std::int64_t system_clock_ms() {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::system_clock::now().time_since_epoch())
      .count();
}

// ---------------------------------------------------------------------------
// Document format

json to_json(const SimilarityMatrix& m) {
  json factors = json::array();
  json provenance = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json frow = json::array();
    json prow = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      frow.push_back(m.factor(i, j));
      prow.push_back(to_string(m.provenance(i, j)));
    }
    factors.push_back(std::move(frow));
    provenance.push_back(std::move(prow));
  }
  return json{{"papers", m.papers()}, {"reviewers", m.reviewers()},
              {"factors", factors}, {"provenance", provenance}};
}

json to_json(const AssignmentProposal& p) {
  json edges = json::array();
  for (const auto& e : p.edges) {
    edges.push_back({{"id", e.id}, {"paper_id", e.paper_id}, {"reviewer_id", e.reviewer_id},
                     {"factor", e.factor}, {"pass", e.pass},
                     {"approval", to_string(e.approval)}, {"origin", to_string(e.origin)}});
  }
  return json{{"edges", edges}};
}

json to_json(const CoIRecord& c) {
  return json{{"paper_id", c.paper_id}, {"reviewer_id", c.reviewer_id},
              {"reason", to_string(c.reason)}, {"evidence", c.evidence}};
}

namespace {

json to_json(const AuditEvent& e) {
  return json{{"timestamp", e.timestamp}, {"actor", e.actor}, {"action", e.action},
              {"payload", e.payload}};
}

[[noreturn]] void malformed(const std::string& message) {
  throw Error(ErrorCode::kMalformedDocument, message);
}

template <typename T, typename Parse>
T parse_enum(const std::string& text, Parse parse, const char* what) {
  const auto v = parse(text);
  if (!v) malformed(std::string("unknown ") + what + " '" + text + "'");
  return *v;
}

SimilarityMatrix matrix_from_json(const json& j) {
  SimilarityMatrix m(require<std::vector<std::string>>(j, "papers"),
                     require<std::vector<std::string>>(j, "reviewers"));
  const auto factors = require<std::vector<std::vector<double>>>(j, "factors");
  const auto provenance = require<std::vector<std::vector<std::string>>>(j, "provenance");
  if (static_cast<Eigen::Index>(factors.size()) != m.rows() ||
      static_cast<Eigen::Index>(provenance.size()) != m.rows()) {
    malformed("matrix row count does not match its paper list");
  }
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    const auto& frow = factors[static_cast<std::size_t>(i)];
    const auto& prow = provenance[static_cast<std::size_t>(i)];
    if (static_cast<Eigen::Index>(frow.size()) != m.cols() ||
        static_cast<Eigen::Index>(prow.size()) != m.cols()) {
      malformed("matrix column count does not match its reviewer list");
    }
    for (Eigen::Index j2 = 0; j2 < m.cols(); ++j2) {
      const auto p = parse_enum<Provenance>(prow[static_cast<std::size_t>(j2)], parse_provenance,
                                            "provenance");
      m.set(i, j2, frow[static_cast<std::size_t>(j2)], p);
    }
  }
  return m;
}

AssignmentProposal proposal_from_json(const json& j) {
  AssignmentProposal p;
  for (const auto& e : require<json>(j, "edges")) {
    AssignmentEdge edge;
    edge.id = require<int>(e, "id");
    edge.paper_id = require<std::string>(e, "paper_id");
    edge.reviewer_id = require<std::string>(e, "reviewer_id");
    edge.factor = require<double>(e, "factor");
    edge.pass = require<int>(e, "pass");
    edge.approval = parse_enum<Approval>(require<std::string>(e, "approval"), parse_approval,
                                         "approval");
    edge.origin = parse_enum<EdgeOrigin>(require<std::string>(e, "origin"), parse_edge_origin,
                                         "origin");
    p.edges.push_back(std::move(edge));
  }
  return p;
}

}  // namespace

std::string save_document(const WorkflowState& state) {
  json doc = to_json(state.conference);
  doc["version"] = kDocumentVersion;
  doc["stage"] = to_string(state.stage);
  doc["matrix"] = state.matrix ? to_json(*state.matrix) : json(nullptr);
  json conflicts = json::array();
  for (const auto& c : state.conflicts) conflicts.push_back(to_json(c));
  doc["conflicts"] = conflicts;
  doc["proposal"] = state.proposal ? to_json(*state.proposal) : json(nullptr);
  doc["next_edge_id"] = state.next_edge_id;
  json audit = json::array();
  for (const auto& e : state.audit) audit.push_back(to_json(e));
  doc["audit"] = audit;
  return doc.dump(2) + "\n";
}

WorkflowState load_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    malformed(std::string("not a JSON document: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("version")) malformed("missing field 'version'");
  const int version = require<int>(doc, "version");
  if (version != kDocumentVersion) {
    throw Error(ErrorCode::kSchemaVersionMismatch,
                "document version " + std::to_string(version) + ", expected " +
                    std::to_string(kDocumentVersion));
  }

  WorkflowState s;
  s.conference = conference_from_json(doc);
  s.stage = parse_enum<Stage>(optional_field<std::string>(doc, "stage", "Draft"), parse_stage,
                              "stage");
  if (doc.contains("matrix") && !doc.at("matrix").is_null()) {
    s.matrix = matrix_from_json(doc.at("matrix"));
  }
  for (const auto& c : optional_field(doc, "conflicts", json::array())) {
    s.conflicts.insert({require<std::string>(c, "paper_id"), require<std::string>(c, "reviewer_id"),
                        parse_enum<CoIReason>(require<std::string>(c, "reason"), parse_coi_reason,
                                              "conflict reason"),
                        require<std::string>(c, "evidence")});
  }
  if (doc.contains("proposal") && !doc.at("proposal").is_null()) {
    s.proposal = proposal_from_json(doc.at("proposal"));
  }
  s.next_edge_id = optional_field(doc, "next_edge_id", 0);
  for (const auto& e : optional_field(doc, "audit", json::array())) {
    s.audit.push_back({require<std::int64_t>(e, "timestamp"), require<std::string>(e, "actor"),
                       require<std::string>(e, "action"), optional_field(e, "payload", json::object())});
  }
  if (s.stage >= Stage::kMatrixBuilt && !s.matrix) malformed("stage requires a matrix");
  if (s.stage >= Stage::kProposed && !s.proposal) malformed("stage requires a proposal");
  return s;
}

std::string audit_jsonl(const std::vector<AuditEvent>& audit) {
  std::string out;
  for (const auto& e : audit) out += to_json(e).dump() + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Workflow

Workflow::Workflow(WorkflowState state, std::shared_ptr<const Taxonomy> taxonomy,
                   std::shared_ptr<const BibCorpus> corpus, Clock clock)
    : state_(std::move(state)),
      taxonomy_(std::move(taxonomy)),
      corpus_(std::move(corpus)),
      clock_(std::move(clock)) {
  if (!taxonomy_) throw Error(ErrorCode::kInvalidConference, "workflow needs a taxonomy");
}

void Workflow::require_stage_at_least(Stage s, std::string_view op) const {
  if (state_.stage < s) {
    throw Error(ErrorCode::kIllegalState, std::string(op) + " is not allowed in stage " +
                                              std::string(to_string(state_.stage)));
  }
}

void Workflow::record(std::string_view actor, std::string action, json payload) {
  std::int64_t ts = clock_();
  if (!state_.audit.empty()) ts = std::max(ts, state_.audit.back().timestamp);
  state_.audit.push_back({ts, std::string(actor), std::move(action), std::move(payload)});
}

const SimilarityMatrix& Workflow::run_pipeline(std::string_view actor) {
  const Conference& conf = state_.conference;
  validate(conf, *taxonomy_);
  CoISet conflicts = detect_all(conf, corpus_.get());
  SimilarityMatrix m = build_similarity_matrix(*taxonomy_, conf, conflicts);

  state_.matrix = std::move(m);
  state_.conflicts = std::move(conflicts);
  state_.proposal.reset();
  state_.stage = Stage::kMatrixBuilt;
  record(actor, "build-matrix",
         {{"papers", conf.papers.size()}, {"reviewers", conf.reviewers.size()},
          {"conflicts", state_.conflicts.size()}});
  return *state_.matrix;
}

AssignmentProblem Workflow::make_problem() const {
  AssignmentProblem p;
  p.matrix = *state_.matrix;
  p.k = state_.conference.config.k;
  p.capacity = state_.conference.config.capacities;
  return p;
}

const AssignmentProposal& Workflow::propose(std::string_view actor) {
  require_stage_at_least(Stage::kMatrixBuilt, "propose");
  AssignmentProposal prop = solve(make_problem(), state_.conference.config.solver);
  for (auto& e : prop.edges) e.id = state_.next_edge_id++;
  const double total = score_proposal(prop, *state_.matrix).total_weight;

  state_.proposal = std::move(prop);
  state_.stage = Stage::kProposed;
  record(actor, "propose",
         {{"solver", to_string(state_.conference.config.solver)},
          {"edges", state_.proposal->edges.size()}, {"total_weight", total}});
  return *state_.proposal;
}

Stage Workflow::approve(const std::optional<std::vector<int>>& edge_ids, std::string_view actor) {
  if (state_.stage != Stage::kProposed && state_.stage != Stage::kPartiallyApproved) {
    throw Error(ErrorCode::kIllegalState, "approve is not allowed in stage " +
                                              std::string(to_string(state_.stage)));
  }
  auto& edges = state_.proposal->edges;
  if (edge_ids) {
    for (int id : *edge_ids) {
      const bool known = std::any_of(edges.begin(), edges.end(),
                                     [&](const AssignmentEdge& e) { return e.id == id; });
      if (!known) throw Error(ErrorCode::kUnknownEdge, "unknown edge " + std::to_string(id));
    }
    for (auto& e : edges) {
      if (std::find(edge_ids->begin(), edge_ids->end(), e.id) != edge_ids->end()) {
        e.approval = Approval::kApproved;
      }
    }
  } else {
    for (auto& e : edges) e.approval = Approval::kApproved;
  }
  const bool all = std::all_of(edges.begin(), edges.end(), [](const AssignmentEdge& e) {
    return e.approval == Approval::kApproved;
  });
  state_.stage = all ? Stage::kApproved : Stage::kPartiallyApproved;
  record(actor, "approve", {{"edge_ids", edge_ids ? json(*edge_ids) : json("all")}});
  return state_.stage;
}

void Workflow::recompute_stage() {
  const auto& edges = state_.proposal->edges;
  const auto approved = std::count_if(edges.begin(), edges.end(), [](const AssignmentEdge& e) {
    return e.approval == Approval::kApproved;
  });
  const auto pending = std::count_if(edges.begin(), edges.end(), [](const AssignmentEdge& e) {
    return e.approval == Approval::kPending;
  });
  if (approved > 0 && pending == 0) {
    state_.stage = Stage::kApproved;
  } else if (approved > 0) {
    state_.stage = Stage::kPartiallyApproved;
  } else {
    state_.stage = Stage::kProposed;
  }
}

AssignmentEdge Workflow::manual_assign(const std::string& paper_id, const std::string& reviewer_id,
                                       bool force, std::string_view actor) {
  require_stage_at_least(Stage::kProposed, "manual assignment");
  const SimilarityMatrix& m = *state_.matrix;
  const auto i = m.paper_index(paper_id);
  const auto j = m.reviewer_index(reviewer_id);
  auto& edges = state_.proposal->edges;
  if (state_.proposal->find(paper_id, reviewer_id) != nullptr) {
    throw Error(ErrorCode::kDuplicateEdge, "(" + paper_id + ", " + reviewer_id + ") is already assigned");
  }
  const bool conflict = m.provenance(i, j) == Provenance::kConflict;
  if (conflict && !force) {
    throw Error(ErrorCode::kConflictRequiresForce,
                "(" + paper_id + ", " + reviewer_id + ") is a conflict of interest");
  }
  const auto caps = reviewer_capacities(state_.conference);
  const auto load = std::count_if(edges.begin(), edges.end(), [&](const AssignmentEdge& e) {
    return e.reviewer_id == reviewer_id;
  });
  const bool over_capacity = load >= caps[static_cast<std::size_t>(j)];
  if (over_capacity && !force) {
    throw Error(ErrorCode::kCapacityRequiresForce, "'" + reviewer_id + "' is at capacity");
  }

  AssignmentEdge e;
  e.id = state_.next_edge_id++;
  e.paper_id = paper_id;
  e.reviewer_id = reviewer_id;
  e.factor = m.factor(i, j);
  e.pass = 0;
  e.approval = Approval::kApproved;
  e.origin = EdgeOrigin::kManual;
  edges.push_back(e);
  recompute_stage();
  record(actor, "assign",
         {{"paper_id", paper_id}, {"reviewer_id", reviewer_id}, {"force", force},
          {"conflict_override", conflict}, {"capacity_override", over_capacity}, {"edge_id", e.id}});
  return e;
}

void Workflow::manual_unassign(const std::string& paper_id, const std::string& reviewer_id,
                               std::string_view actor) {
  require_stage_at_least(Stage::kProposed, "manual unassignment");
  auto& edges = state_.proposal->edges;
  const auto it = std::find_if(edges.begin(), edges.end(), [&](const AssignmentEdge& e) {
    return e.paper_id == paper_id && e.reviewer_id == reviewer_id;
  });
  if (it == edges.end()) {
    throw Error(ErrorCode::kUnknownEdge, "(" + paper_id + ", " + reviewer_id + ") is not assigned");
  }
  const int id = it->id;
  edges.erase(it);
  recompute_stage();
  record(actor, "unassign", {{"paper_id", paper_id}, {"reviewer_id", reviewer_id}, {"edge_id", id}});
}

AssignmentProposal Workflow::what_if(const std::set<PairKey>& pinned,
                                     const std::set<PairKey>& forbidden) const {
  require_stage_at_least(Stage::kMatrixBuilt, "what-if");
  AssignmentProblem p = make_problem();
  p.pinned = pinned;
  p.excluded = forbidden;
  AssignmentProposal prop = solve(p, state_.conference.config.solver);
  int next = state_.next_edge_id;
  for (auto& e : prop.edges) e.id = next++;
  return prop;
}

WorkflowStatus Workflow::status() const {
  WorkflowStatus s;
  s.stage = state_.stage;
  s.conflicts = state_.conflicts.size();
  if (!state_.proposal) return s;
  std::map<std::string, int> per_paper;
  for (const auto& p : state_.conference.papers) per_paper[p.id] = 0;
  for (const auto& e : state_.proposal->edges) {
    ++s.edges;
    if (e.approval == Approval::kPending) ++s.pending;
    if (e.approval == Approval::kApproved) ++s.approved;
    ++per_paper[e.paper_id];
  }
  for (const auto& p : state_.conference.papers) {
    const int n = per_paper[p.id];
    if (n < state_.conference.config.k) {
      s.warnings.push_back("paper " + p.id + " has " + std::to_string(n) + " of " +
                           std::to_string(state_.conference.config.k) + " reviewers");
    }
  }
  return s;
}

std::size_t Workflow::state_hash() const { return std::hash<std::string>{}(save_document(state_)); }

WorkflowState Workflow::replay(const WorkflowState& initial, const std::vector<AuditEvent>& log,
                               std::shared_ptr<const Taxonomy> taxonomy,
                               std::shared_ptr<const BibCorpus> corpus) {
  std::int64_t now = 0;
  Workflow w(initial, std::move(taxonomy), std::move(corpus), [&now] { return now; });
  for (const auto& e : log) {
    now = e.timestamp;
    if (e.action == "build-matrix") {
      w.run_pipeline(e.actor);
    } else if (e.action == "propose") {
      w.propose(e.actor);
    } else if (e.action == "approve") {
      const auto& ids = e.payload.at("edge_ids");
      w.approve(ids.is_string() ? std::nullopt : std::optional(ids.get<std::vector<int>>()), e.actor);
    } else if (e.action == "assign") {
      w.manual_assign(e.payload.at("paper_id"), e.payload.at("reviewer_id"),
                      e.payload.at("force").get<bool>(), e.actor);
    } else if (e.action == "unassign") {
      w.manual_unassign(e.payload.at("paper_id"), e.payload.at("reviewer_id"), e.actor);
    } else {
      malformed("cannot replay audit action '" + e.action + "'");
    }
  }
  return w.state_;
}

}  // namespace confassign
