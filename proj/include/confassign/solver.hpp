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
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "confassign/bids.hpp"
#include "confassign/conference.hpp"
#include "confassign/similarity_matrix.hpp"

namespace confassign {

enum class Approval { kPending, kApproved, kRejected };
enum class EdgeOrigin { kAutomatic, kManual };

std::string_view to_string(Approval a);
std::optional<Approval> parse_approval(std::string_view text);
std::string_view to_string(EdgeOrigin o);
std::optional<EdgeOrigin> parse_edge_origin(std::string_view text);

struct AssignmentEdge {
  int id = 0;
  std::string paper_id;
  std::string reviewer_id;
  double factor = 0.0;
  int pass = 0;  // 0 for pinned or manual edges
  Approval approval = Approval::kPending;
  EdgeOrigin origin = EdgeOrigin::kAutomatic;

  friend bool operator==(const AssignmentEdge&, const AssignmentEdge&) = default;
};

struct AssignmentProposal {
  std::vector<AssignmentEdge> edges;

  const AssignmentEdge* find(std::string_view paper_id, std::string_view reviewer_id) const;
  friend bool operator==(const AssignmentProposal&, const AssignmentProposal&) = default;
};

struct AssignmentProblem {
  SimilarityMatrix matrix;
  int k = 1;
  // Reviewers without an entry get ceil(k * |P| / |R|).
  std::map<std::string, int> capacity;
  // Pairs the solver may not use, on top of Conflict cells.
  std::set<PairKey> excluded;
  // Pairs fixed up front; they consume capacity and count toward k.
  std::set<PairKey> pinned;
};

int default_capacity(const AssignmentProblem& p);

/// k passes of maximum-weight matching between the papers still short of
/// reviewers and one slot per unit of remaining reviewer capacity. Throws
/// InfeasibleError naming the starved papers.
AssignmentProposal solve_multipass(const AssignmentProblem& p);

/// Papers in ascending order of eligible-reviewer count (re-evaluated after
/// each paper, ties by index) take their best eligible reviewers, ties by
/// lower current load and then lower reviewer index.
AssignmentProposal solve_greedy(const AssignmentProblem& p);

AssignmentProposal solve(const AssignmentProblem& p, SolverKind kind);

struct ProposalScore {
  double total_weight = 0.0;
  std::optional<double> min_edge;
  std::map<std::string, int> load;
};

/// Total and minimum factor taken from `m`, plus the per-reviewer edge count
/// (every matrix reviewer present, zero if unassigned). Throws UnknownId.
ProposalScore score_proposal(const AssignmentProposal& prop, const SimilarityMatrix& m);

}  // namespace confassign
