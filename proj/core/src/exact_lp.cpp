// SPDX-License-Identifier: Apache-2.0
#include "bt1/exact_lp.hpp"

#include "bt1/errors.hpp"

namespace bt1 {

std::optional<std::vector<Rational>> find_feasible_point(const LpProblem& problem) {
  const std::size_t m = problem.rows.size();
  const auto n = static_cast<std::size_t>(problem.num_vars);
  if (problem.rhs.size() != m) fail(ErrorCode::kInternal, "LP row/rhs count mismatch");
  if (m == 0) return std::vector<Rational>(n, Rational(0));

  // Columns: x (n), surplus (m), artificial (m); last column is the rhs.
  // Row k: sign * (a.x - s_k) + art_k = sign * b_k with sign making rhs >= 0.
  const std::size_t cols = n + 2 * m;
  std::vector<std::vector<Rational>> t(m, std::vector<Rational>(cols + 1, Rational(0)));
  std::vector<std::size_t> basis(m);
  for (std::size_t k = 0; k < m; ++k) {
    if (problem.rows[k].size() != n) fail(ErrorCode::kInternal, "LP row length mismatch");
    const int sign = problem.rhs[k] < 0 ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) t[k][j] = sign * problem.rows[k][j];
    t[k][n + k] = -sign;
    t[k][n + m + k] = 1;
    t[k][cols] = sign * problem.rhs[k];
    basis[k] = n + m + k;
  }

  // Reduced costs of the phase-1 objective min sum(art) = -sum of rows over
  // the non-artificial columns.
  std::vector<Rational> cost(cols + 1, Rational(0));
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t j = 0; j < n + m; ++j) cost[j] -= t[k][j];
    cost[cols] -= t[k][cols];
  }

  while (true) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j) {
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == cols) break;

    std::size_t leave = m;
    Rational best;
    for (std::size_t k = 0; k < m; ++k) {
      if (t[k][enter] <= 0) continue;
      Rational ratio = t[k][cols] / t[k][enter];
      if (leave == m || ratio < best || (ratio == best && basis[k] < basis[leave])) {
        leave = k;
        best = ratio;
      }
    }
    if (leave == m) fail(ErrorCode::kInternal, "phase-1 objective unbounded");

    const Rational pivot = t[leave][enter];
    for (auto& v : t[leave]) v /= pivot;
    for (std::size_t k = 0; k < m; ++k) {
      if (k == leave || t[k][enter] == 0) continue;
      const Rational factor = t[k][enter];
      for (std::size_t j = 0; j <= cols; ++j) {
        if (t[leave][j] != 0) t[k][j] -= factor * t[leave][j];
      }
    }
    if (cost[enter] != 0) {
      const Rational factor = cost[enter];
      for (std::size_t j = 0; j <= cols; ++j) {
        if (t[leave][j] != 0) cost[j] -= factor * t[leave][j];
      }
    }
    basis[leave] = enter;
  }

  // Optimal phase-1 value is -cost[cols].
  if (cost[cols] != 0) return std::nullopt;
  std::vector<Rational> x(n, Rational(0));
  for (std::size_t k = 0; k < m; ++k) {
    if (basis[k] < n) x[basis[k]] = t[k][cols];
  }
  return x;
}

}  // namespace bt1
