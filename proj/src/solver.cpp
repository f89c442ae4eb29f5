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

#include "confassign/solver.hpp"

#include <algorithm>
#include <numeric>

#include "confassign/hungarian.hpp"

namespace confassign {

std::string_view to_string(Approval a) {
  switch (a) {
    case Approval::kPending: return "Pending";
    case Approval::kApproved: return "Approved";
    case Approval::kRejected: return "Rejected";
  }
  return "Pending";
}

std::optional<Approval> parse_approval(std::string_view text) {
  if (text == "Pending") return Approval::kPending;
  if (text == "Approved") return Approval::kApproved;
  if (text == "Rejected") return Approval::kRejected;
  return std::nullopt;
}

std::string_view to_string(EdgeOrigin o) {
  return o == EdgeOrigin::kAutomatic ? "Automatic" : "Manual";
}

std::optional<EdgeOrigin> parse_edge_origin(std::string_view text) {
  if (text == "Automatic") return EdgeOrigin::kAutomatic;
  if (text == "Manual") return EdgeOrigin::kManual;
  return std::nullopt;
}

const AssignmentEdge* AssignmentProposal::find(std::string_view paper_id,
                                               std::string_view reviewer_id) const {
  for (const auto& e : edges) {
    if (e.paper_id == paper_id && e.reviewer_id == reviewer_id) return &e;
  }
  return nullptr;
}

int default_capacity(const AssignmentProblem& p) {
  const auto papers = static_cast<long>(p.matrix.rows());
  const auto reviewers = static_cast<long>(p.matrix.cols());
  if (reviewers == 0) return 0;
  return static_cast<int>((p.k * papers + reviewers - 1) / reviewers);
}

namespace {

using Index = Eigen::Index;

// Mutable bookkeeping shared by both solvers.
struct SolveState {
  const SimilarityMatrix& m;
  BoolMatrix blocked;  // Conflict, excluded, or already assigned
  std::vector<int> capacity;
  std::vector<int> load;
  std::vector<int> count;  // reviewers per paper
  AssignmentProposal proposal;

  explicit SolveState(const AssignmentProblem& p)
      : m(p.matrix),
        blocked(p.matrix.conflict_mask()),
        capacity(static_cast<std::size_t>(p.matrix.cols()), default_capacity(p)),
        load(static_cast<std::size_t>(p.matrix.cols()), 0),
        count(static_cast<std::size_t>(p.matrix.rows()), 0) {
    if (p.k < 1) throw Error(ErrorCode::kInvalidConference, "k must be at least 1");
    for (const auto& [id, cap] : p.capacity) {
      capacity[static_cast<std::size_t>(m.reviewer_index(id))] = cap;
    }
    for (const auto& [paper, reviewer] : p.excluded) {
      blocked(m.paper_index(paper), m.reviewer_index(reviewer)) = true;
    }
    for (const auto& [paper, reviewer] : p.pinned) {
      const Index i = m.paper_index(paper);
      const Index j = m.reviewer_index(reviewer);
      if (m.provenance(i, j) == Provenance::kConflict) {
        throw Error(ErrorCode::kConflictRequiresForce,
                    "pinned pair (" + paper + ", " + reviewer + ") is a conflict");
      }
      if (load[static_cast<std::size_t>(j)] >= capacity[static_cast<std::size_t>(j)]) {
        throw Error(ErrorCode::kCapacityRequiresForce,
                    "pins exceed the capacity of '" + reviewer + "'");
      }
      add(i, j, 0, EdgeOrigin::kManual);
    }
  }

  int remaining(Index j) const {
    return capacity[static_cast<std::size_t>(j)] - load[static_cast<std::size_t>(j)];
  }

  void add(Index i, Index j, int pass, EdgeOrigin origin) {
    AssignmentEdge e;
    e.id = static_cast<int>(proposal.edges.size());
    e.paper_id = m.papers()[static_cast<std::size_t>(i)];
    e.reviewer_id = m.reviewers()[static_cast<std::size_t>(j)];
    e.factor = m.factor(i, j);
    e.pass = pass;
    e.origin = origin;
    proposal.edges.push_back(std::move(e));
    blocked(i, j) = true;
    ++load[static_cast<std::size_t>(j)];
    ++count[static_cast<std::size_t>(i)];
  }
};

}  // namespace

AssignmentProposal solve_multipass(const AssignmentProblem& p) {
  SolveState s(p);
  const auto& m = p.matrix;

  for (int pass = 1; pass <= p.k; ++pass) {
    std::vector<Index> left;
    for (Index i = 0; i < m.rows(); ++i) {
      if (s.count[static_cast<std::size_t>(i)] < pass) left.push_back(i);
    }
    if (left.empty()) continue;

    std::vector<Index> slot_owner;
    for (Index j = 0; j < m.cols(); ++j) {
      for (int c = 0; c < s.remaining(j); ++c) slot_owner.push_back(j);
    }

    std::vector<std::string> starved;
    if (slot_owner.empty()) {
      for (Index i : left) starved.push_back(m.papers()[static_cast<std::size_t>(i)]);
      throw InfeasibleError(std::move(starved));
    }

    const auto rows = static_cast<Index>(left.size());
    const auto cols = static_cast<Index>(slot_owner.size());
    Eigen::MatrixXd weights(rows, cols);
    BoolMatrix forbidden(rows, cols);
    for (Index r = 0; r < rows; ++r) {
      for (Index c = 0; c < cols; ++c) {
        const Index i = left[static_cast<std::size_t>(r)];
        const Index j = slot_owner[static_cast<std::size_t>(c)];
        weights(r, c) = m.factor(i, j);
        forbidden(r, c) = s.blocked(i, j);
      }
    }

    Matching matching;
    try {
      matching = hungarian_max_weight(weights, forbidden);
    } catch (const InfeasibleError& e) {
      for (const auto& row : e.starved()) {
        starved.push_back(m.papers()[static_cast<std::size_t>(left[std::stoul(row)])]);
      }
      throw InfeasibleError(std::move(starved));
    }
    if (static_cast<Index>(matching.size()) < rows) {
      std::vector<char> hit(static_cast<std::size_t>(rows), 0);
      for (const auto& pr : matching) hit[static_cast<std::size_t>(pr.row)] = 1;
      for (Index r = 0; r < rows; ++r) {
        if (!hit[static_cast<std::size_t>(r)]) {
          starved.push_back(m.papers()[static_cast<std::size_t>(left[static_cast<std::size_t>(r)])]);
        }
      }
      throw InfeasibleError(std::move(starved));
    }
    for (const auto& pr : matching) {
      s.add(left[static_cast<std::size_t>(pr.row)], slot_owner[static_cast<std::size_t>(pr.col)],
            pass, EdgeOrigin::kAutomatic);
    }
  }
  return std::move(s.proposal);
}

AssignmentProposal solve_greedy(const AssignmentProblem& p) {
  SolveState s(p);
  const auto& m = p.matrix;

  auto eligible = [&](Index i, Index j) { return !s.blocked(i, j) && s.remaining(j) > 0; };
  auto eligible_count = [&](Index i) {
    int n = 0;
    for (Index j = 0; j < m.cols(); ++j) n += eligible(i, j) ? 1 : 0;
    return n;
  };

  std::vector<char> done(static_cast<std::size_t>(m.rows()), 0);
  std::vector<std::string> starved;
  for (Index step = 0; step < m.rows(); ++step) {
    Index next = -1;
    int best_count = 0;
    for (Index i = 0; i < m.rows(); ++i) {
      if (done[static_cast<std::size_t>(i)]) continue;
      const int c = eligible_count(i);
      if (next < 0 || c < best_count) {
        next = i;
        best_count = c;
      }
    }
    done[static_cast<std::size_t>(next)] = 1;

    const int need = p.k - s.count[static_cast<std::size_t>(next)];
    if (need <= 0) continue;
    std::vector<Index> candidates;
    for (Index j = 0; j < m.cols(); ++j) {
      if (eligible(next, j)) candidates.push_back(j);
    }
    std::stable_sort(candidates.begin(), candidates.end(), [&](Index a, Index b) {
      if (m.factor(next, a) != m.factor(next, b)) return m.factor(next, a) > m.factor(next, b);
      if (s.load[static_cast<std::size_t>(a)] != s.load[static_cast<std::size_t>(b)]) {
        return s.load[static_cast<std::size_t>(a)] < s.load[static_cast<std::size_t>(b)];
      }
      return a < b;
    });
    if (static_cast<int>(candidates.size()) < need) {
      starved.push_back(m.papers()[static_cast<std::size_t>(next)]);
      continue;
    }
    const int first_pass = s.count[static_cast<std::size_t>(next)] + 1;
    for (int t = 0; t < need; ++t) {
      s.add(next, candidates[static_cast<std::size_t>(t)], first_pass + t, EdgeOrigin::kAutomatic);
    }
  }
  if (!starved.empty()) {
    std::sort(starved.begin(), starved.end());
    throw InfeasibleError(std::move(starved));
  }
  return std::move(s.proposal);
}

AssignmentProposal solve(const AssignmentProblem& p, SolverKind kind) {
  return kind == SolverKind::kGreedy ? solve_greedy(p) : solve_multipass(p);
}

ProposalScore score_proposal(const AssignmentProposal& prop, const SimilarityMatrix& m) {
  ProposalScore score;
  for (const auto& r : m.reviewers()) score.load[r] = 0;
  for (const auto& e : prop.edges) {
    Index i = 0;
    Index j = 0;
    try {
      i = m.paper_index(e.paper_id);
      j = m.reviewer_index(e.reviewer_id);
    } catch (const Error& err) {
      throw Error(ErrorCode::kUnknownId, err.what());
    }
    const double f = m.factor(i, j);
    score.total_weight += f;
    score.min_edge = score.min_edge ? std::min(*score.min_edge, f) : f;
    ++score.load[e.reviewer_id];
  }
  return score;
}

}  // namespace confassign
