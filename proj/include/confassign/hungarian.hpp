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

#include <algorithm>
#include <cmath>
#include <compare>
#include <deque>
#include <limits>
#include <string>
#include <type_traits>
#include <vector>

#include <Eigen/Dense>

#include "confassign/error.hpp"
#include "confassign/similarity_matrix.hpp"

namespace confassign {

struct MatchedPair {
  Eigen::Index row = 0;
  Eigen::Index col = 0;

  friend auto operator<=>(const MatchedPair&, const MatchedPair&) = default;
};

using Matching = std::vector<MatchedPair>;

namespace detail {

// Square min-cost assignment with an allowed mask (disallowed cells behave as
// +infinity). Shortest augmenting path formulation with row/column
// potentials; rows that cannot be augmented are reported in `starved` and
// left unmatched.
template <typename Scalar>
struct SquareAssignment {
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  const Matrix& cost;
  const BoolMatrix& allowed;
  Eigen::Index n = 0;

  std::vector<Scalar> u, v;
  std::vector<Eigen::Index> row_of_col;  // 1-based rows, 0 = free
  std::vector<Eigen::Index> starved;     // 0-based rows

  SquareAssignment(const Matrix& c, const BoolMatrix& a) : cost(c), allowed(a), n(c.rows()) {}

  void solve() {
    const auto m = n;
    u.assign(static_cast<std::size_t>(n + 1), Scalar(0));
    v.assign(static_cast<std::size_t>(m + 1), Scalar(0));
    row_of_col.assign(static_cast<std::size_t>(m + 1), 0);
    std::vector<Eigen::Index> way(static_cast<std::size_t>(m + 1), 0);
    std::vector<Scalar> minv(static_cast<std::size_t>(m + 1));
    std::vector<char> has(static_cast<std::size_t>(m + 1));
    std::vector<char> used(static_cast<std::size_t>(m + 1));

    for (Eigen::Index i = 1; i <= n; ++i) {
      row_of_col[0] = i;
      Eigen::Index j0 = 0;
      std::fill(has.begin(), has.end(), 0);
      std::fill(used.begin(), used.end(), 0);
      bool failed = false;
      do {
        used[static_cast<std::size_t>(j0)] = 1;
        const Eigen::Index i0 = row_of_col[static_cast<std::size_t>(j0)];
        Scalar delta{};
        Eigen::Index j1 = -1;
        for (Eigen::Index j = 1; j <= m; ++j) {
          const auto sj = static_cast<std::size_t>(j);
          if (used[sj]) continue;
          if (allowed(i0 - 1, j - 1)) {
            const Scalar cur = cost(i0 - 1, j - 1) - u[static_cast<std::size_t>(i0)] - v[sj];
            if (!has[sj] || cur < minv[sj]) {
              minv[sj] = cur;
              has[sj] = 1;
              way[sj] = j0;
            }
          }
          if (has[sj] && (j1 < 0 || minv[sj] < delta)) {
            delta = minv[sj];
            j1 = j;
          }
        }
        if (j1 < 0) {
          failed = true;
          break;
        }
        for (Eigen::Index j = 0; j <= m; ++j) {
          const auto sj = static_cast<std::size_t>(j);
          if (used[sj]) {
            u[static_cast<std::size_t>(row_of_col[sj])] += delta;
            v[sj] -= delta;
          } else if (has[sj]) {
            minv[sj] -= delta;
          }
        }
        j0 = j1;
      } while (row_of_col[static_cast<std::size_t>(j0)] != 0);

      if (failed) {
        starved.push_back(i - 1);
        continue;
      }
      do {
        const Eigen::Index j1 = way[static_cast<std::size_t>(j0)];
        row_of_col[static_cast<std::size_t>(j0)] = row_of_col[static_cast<std::size_t>(j1)];
        j0 = j1;
      } while (j0 != 0);
    }
  }

  // Reduced cost is zero, up to rounding for floating-point scalars.
  bool tight(Eigen::Index i, Eigen::Index j, Scalar eps) const {
    if (!allowed(i, j)) return false;
    const Scalar reduced = cost(i, j) - u[static_cast<std::size_t>(i + 1)] -
                           v[static_cast<std::size_t>(j + 1)];
    if constexpr (std::is_floating_point_v<Scalar>) {
      return std::abs(reduced) <= eps;
    } else {
      return reduced == Scalar(0);
    }
  }

  // Among all optimal perfect matchings (the perfect matchings of the tight
  // subgraph), rewires to the one whose column sequence for rows
  // [0, lex_rows) is lexicographically smallest.
  std::vector<Eigen::Index> lexicographic_optimum(Eigen::Index lex_rows, Scalar eps) const {
    std::vector<Eigen::Index> col_of_row(static_cast<std::size_t>(n));
    std::vector<Eigen::Index> owner(static_cast<std::size_t>(n));
    for (Eigen::Index j = 0; j < n; ++j) {
      const auto r = row_of_col[static_cast<std::size_t>(j + 1)] - 1;
      owner[static_cast<std::size_t>(j)] = r;
      col_of_row[static_cast<std::size_t>(r)] = j;
    }
    std::vector<char> row_fixed(static_cast<std::size_t>(n), 0);
    std::vector<char> col_fixed(static_cast<std::size_t>(n), 0);
    std::vector<Eigen::Index> pred_row(static_cast<std::size_t>(n));
    std::vector<char> seen(static_cast<std::size_t>(n));

    for (Eigen::Index i = 0; i < lex_rows; ++i) {
      const auto si = static_cast<std::size_t>(i);
      for (Eigen::Index c = 0; c < n; ++c) {
        const auto sc = static_cast<std::size_t>(c);
        if (col_fixed[sc] || !tight(i, c, eps)) continue;
        if (col_of_row[si] == c) break;
        // Row i wants c. Search an alternating path from the current owner of
        // c to the column i gives up, avoiding fixed rows/columns.
        const Eigen::Index target = col_of_row[si];
        const Eigen::Index start = owner[sc];
        std::fill(seen.begin(), seen.end(), 0);
        std::deque<Eigen::Index> queue{start};
        seen[static_cast<std::size_t>(start)] = 1;
        Eigen::Index end_row = -1;
        while (!queue.empty() && end_row < 0) {
          const Eigen::Index x = queue.front();
          queue.pop_front();
          for (Eigen::Index y = 0; y < n; ++y) {
            const auto sy = static_cast<std::size_t>(y);
            if (y == c || col_fixed[sy] || y == col_of_row[static_cast<std::size_t>(x)] ||
                !tight(x, y, eps)) {
              continue;
            }
            if (y == target) {
              end_row = x;
              break;
            }
            const Eigen::Index next = owner[sy];
            const auto sn = static_cast<std::size_t>(next);
            if (next == i || row_fixed[sn] || seen[sn]) continue;
            seen[sn] = 1;
            pred_row[sn] = x;
            queue.push_back(next);
          }
        }
        if (end_row < 0) continue;
        // Rotate along the path: end_row takes target, every predecessor
        // takes the column its successor held, and i takes c.
        Eigen::Index x = end_row;
        Eigen::Index take = target;
        while (true) {
          const Eigen::Index held = col_of_row[static_cast<std::size_t>(x)];
          col_of_row[static_cast<std::size_t>(x)] = take;
          owner[static_cast<std::size_t>(take)] = x;
          if (x == start) break;
          take = held;
          x = pred_row[static_cast<std::size_t>(x)];
        }
        col_of_row[si] = c;
        owner[sc] = i;
        break;
      }
      row_fixed[si] = 1;
      col_fixed[static_cast<std::size_t>(col_of_row[si])] = 1;
    }
    return col_of_row;
  }
};

}  // namespace detail

/// Maximum-weight one-to-one matching over the allowed cells of a
/// rectangular grid. Every row is matched when rows <= cols; otherwise as
/// many columns as the allowed cells permit. Padding rows/columns are
/// stripped. Among equal-weight optima the lexicographically smallest
/// (row, col) sequence is returned. Throws InfeasibleError listing the
/// unmatchable rows when rows <= cols and no row-perfect matching exists.
template <typename Derived>
Matching hungarian_max_weight(const Eigen::MatrixBase<Derived>& weights,
                              const BoolMatrix& forbidden) {
  using Scalar = typename Derived::Scalar;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const Eigen::Index rows = weights.rows();
  const Eigen::Index cols = weights.cols();
  if (forbidden.rows() != rows || forbidden.cols() != cols) {
    throw Error(ErrorCode::kInvalidConference, "forbidden mask does not match the weight grid");
  }
  if (rows == 0 || cols == 0) return {};

  const bool wide = rows <= cols;
  // Tall grids get one private dummy column per row plus square-up rows;
  // real edges carry a bonus so the number of real pairs is maximized
  // before their weight.
  const Eigen::Index n = wide ? cols : rows + cols;
  Scalar bonus(0);
  if (!wide) {
    const Scalar max_abs = weights.cwiseAbs().maxCoeff();
    bonus = Scalar(1) + Scalar(2) * static_cast<Scalar>(cols) * max_abs;
  }

  Matrix cost = Matrix::Zero(n, n);
  BoolMatrix allowed = BoolMatrix::Constant(n, n, true);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      cost(i, j) = -(weights(i, j) + bonus);
      allowed(i, j) = !forbidden(i, j);
    }
  }

  detail::SquareAssignment<Scalar> solver(cost, allowed);
  solver.solve();
  if (!solver.starved.empty()) {
    std::vector<std::string> ids;
    for (auto r : solver.starved) ids.push_back(std::to_string(r));
    throw InfeasibleError(std::move(ids));
  }

  Scalar eps(0);
  if constexpr (std::is_floating_point_v<Scalar>) {
    eps = Scalar(1e-9) * (Scalar(1) + cost.cwiseAbs().maxCoeff());
  }
  const auto col_of_row = solver.lexicographic_optimum(rows, eps);

  Matching out;
  for (Eigen::Index i = 0; i < rows; ++i) {
    const Eigen::Index j = col_of_row[static_cast<std::size_t>(i)];
    if (j < cols) out.push_back({i, j});
  }
  return out;
}

template <typename Derived>
Matching hungarian_max_weight(const Eigen::MatrixBase<Derived>& weights) {
  return hungarian_max_weight(weights,
                              BoolMatrix::Constant(weights.rows(), weights.cols(), false));
}

template <typename Derived>
typename Derived::Scalar matching_weight(const Eigen::MatrixBase<Derived>& weights,
                                         const Matching& matching) {
  typename Derived::Scalar total(0);
  for (const auto& p : matching) total += weights(p.row, p.col);
  return total;
}

}  // namespace confassign
