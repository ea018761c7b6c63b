// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "bt1/fq_matrix.hpp"

namespace bt1 {

/// Number of z in (F_{q^N})^n with z = a * z^(p), found as the kernel of the
/// F_p-linear map z -> z - a z^(p) on F_{q^N}^n.
std::uint64_t count_fixed_points(const FqMatrix& a, int extension_degree);

/// Least N such that every F_q-Frobenius orbit on the solution space over the
/// algebraic closure is pointwise fixed over F_{q^N}: the exponent of
/// GL_n(F_p), lcm(p^k - 1, k <= n) * p^ceil(log_p n).
std::uint64_t stabilizing_degree(int p, int n);

struct FixedPointCount {
  int extension_degree = 0;
  std::uint64_t count = 0;
  int log_p_count = 0;
};

/// Count over F_{q^N} with N = stabilizing_degree; throws Error(kNotStabilized)
/// when N exceeds `max_extension`.
FixedPointCount stabilized_fixed_point_count(const FqMatrix& a, int max_extension = 64);

}  // namespace bt1
