// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <vector>

#include "bt1/rational.hpp"

namespace bt1 {

/// Feasibility of { rows[k] . x >= rhs[k] for all k, x >= 0 } over Q.
struct LpProblem {
  int num_vars = 0;
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
};

/// Phase-1 simplex in exact arithmetic with Bland's rule (so it terminates).
/// Returns a feasible point or nullopt.
std::optional<std::vector<Rational>> find_feasible_point(const LpProblem& problem);

}  // namespace bt1
