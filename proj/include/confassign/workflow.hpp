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

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "confassign/bibliography.hpp"
#include "confassign/coi.hpp"
#include "confassign/conference.hpp"
#include "confassign/similarity_matrix.hpp"
#include "confassign/solver.hpp"
#include "confassign/taxonomy.hpp"

namespace confassign {

enum class Stage { kDraft, kMatrixBuilt, kProposed, kPartiallyApproved, kApproved };

std::string_view to_string(Stage s);
std::optional<Stage> parse_stage(std::string_view text);

struct AuditEvent {
  std::int64_t timestamp = 0;  // milliseconds since the Unix epoch
  std::string actor;
  std::string action;
  nlohmann::json payload = nlohmann::json::object();

  friend bool operator==(const AuditEvent&, const AuditEvent&) = default;
};

// Everything persisted for one conference.
struct WorkflowState {
  Conference conference;
  Stage stage = Stage::kDraft;
  std::optional<SimilarityMatrix> matrix;
  CoISet conflicts;
  std::optional<AssignmentProposal> proposal;
  int next_edge_id = 0;
  std::vector<AuditEvent> audit;

  // The same conference with no derived data and an empty audit log.
  WorkflowState initial() const;

  friend bool operator==(const WorkflowState&, const WorkflowState&) = default;
};

inline constexpr int kDocumentVersion = 1;

/// Versioned JSON document. Output is deterministic (sorted keys, two-space
/// indentation), so equal states serialize to identical bytes.
std::string save_document(const WorkflowState& state);

/// Throws SchemaVersionMismatch or MalformedDocument.
WorkflowState load_document(std::string_view text);

/// One JSON object per line.
std::string audit_jsonl(const std::vector<AuditEvent>& audit);

nlohmann::json to_json(const SimilarityMatrix& m);
nlohmann::json to_json(const AssignmentProposal& p);
nlohmann::json to_json(const CoIRecord& c);

using Clock = std::function<std::int64_t()>;
std::int64_t system_clock_ms();

struct WorkflowStatus {
  Stage stage = Stage::kDraft;
  std::size_t edges = 0;
  std::size_t pending = 0;
  std::size_t approved = 0;
  std::size_t conflicts = 0;
  std::vector<std::string> warnings;
};

/// Single-writer orchestration of the assignment process over one
/// WorkflowState. Not internally synchronized; callers serialize mutations.
class Workflow {
 public:
  Workflow(WorkflowState state, std::shared_ptr<const Taxonomy> taxonomy,
           std::shared_ptr<const BibCorpus> corpus = nullptr, Clock clock = system_clock_ms);

  const WorkflowState& state() const { return state_; }
  Stage stage() const { return state_.stage; }
  const Taxonomy& taxonomy() const { return *taxonomy_; }
  void set_clock(Clock clock) { clock_ = std::move(clock); }

  /// Rewrites keywords, detects conflicts, merges bids and stores the
  /// matrix. Any existing proposal is discarded.
  const SimilarityMatrix& run_pipeline(std::string_view actor);

  /// Requires a built matrix. Replaces the proposal; all edges Pending.
  const AssignmentProposal& propose(std::string_view actor);

  /// nullopt approves every edge.
  Stage approve(const std::optional<std::vector<int>>& edge_ids, std::string_view actor);

  AssignmentEdge manual_assign(const std::string& paper_id, const std::string& reviewer_id,
                               bool force, std::string_view actor);

  void manual_unassign(const std::string& paper_id, const std::string& reviewer_id,
                       std::string_view actor);

  /// Solves with pins and extra exclusions on a snapshot; never mutates.
  AssignmentProposal what_if(const std::set<PairKey>& pinned,
                             const std::set<PairKey>& forbidden) const;

  WorkflowStatus status() const;

  std::size_t state_hash() const;

  /// Re-applies `log` to `initial`, using each event's own timestamp.
  static WorkflowState replay(const WorkflowState& initial, const std::vector<AuditEvent>& log,
                              std::shared_ptr<const Taxonomy> taxonomy,
                              std::shared_ptr<const BibCorpus> corpus = nullptr);

 private:
  void require_stage_at_least(Stage s, std::string_view op) const;
  AssignmentProblem make_problem() const;
  void recompute_stage();
  void record(std::string_view actor, std::string action, nlohmann::json payload);

  WorkflowState state_;
  std::shared_ptr<const Taxonomy> taxonomy_;
  std::shared_ptr<const BibCorpus> corpus_;
  Clock clock_;
};

}  // namespace confassign
