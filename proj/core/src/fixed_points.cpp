// SPDX-License-Identifier: Apache-2.0
#include "bt1/fixed_points.hpp"

#include <numeric>
#include <vector>

#include "bt1/errors.hpp"
#include "bt1/polynomial.hpp"

namespace bt1 {

std::uint64_t count_fixed_points(const FqMatrix& a, int extension_degree) {
  if (a.rows() != a.cols()) fail(ErrorCode::kInvalidDatum, "fixed points need a square matrix");
  const FiniteField& base = *a.field();
  const TowerField tower(a.field(), extension_degree);
  const int n = a.rows();
  const int N = extension_degree;
  const int e = base.e();
  const int p = base.p();
  const int dim = n * N * e;

  // Column b of the F_p-matrix is the image of the b-th basis vector
  // (x^s) y^k placed in coordinate m.
  std::vector<std::vector<int>> matrix(static_cast<std::size_t>(dim),
                                       std::vector<int>(static_cast<std::size_t>(dim), 0));
  int column = 0;
  for (int m = 0; m < n; ++m) {
    for (int k = 0; k < N; ++k) {
      for (int s = 0; s < e; ++s, ++column) {
        std::vector<TowerField::Value> z(static_cast<std::size_t>(n), tower.zero());
        std::vector<int> digits(static_cast<std::size_t>(e), 0);
        digits[static_cast<std::size_t>(s)] = 1;
        z[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)] = base.from_digits(digits);

        std::vector<TowerField::Value> twisted;
        for (const auto& zi : z) twisted.push_back(tower.frob(zi));
        int row = 0;
        for (int i = 0; i < n; ++i) {
          TowerField::Value image = z[static_cast<std::size_t>(i)];
          for (int j = 0; j < n; ++j) {
            image = tower.sub(image, tower.scale(a.at(i, j), twisted[static_cast<std::size_t>(j)]));
          }
          for (int kk = 0; kk < N; ++kk) {
            const auto coeff_digits = base.digits(image[static_cast<std::size_t>(kk)]);
            for (int ss = 0; ss < e; ++ss, ++row) {
              matrix[static_cast<std::size_t>(row)][static_cast<std::size_t>(column)] =
                  coeff_digits[static_cast<std::size_t>(ss)];
            }
          }
        }
      }
    }
  }
  const int kernel = dim - rank_mod_p(std::move(matrix), p);
  if (kernel > 63) fail(ErrorCode::kInternal, "fixed-point count overflows");
  std::uint64_t count = 1;
  for (int k = 0; k < kernel; ++k) count *= static_cast<std::uint64_t>(p);
  return count;
}

std::uint64_t stabilizing_degree(int p, int n) {
  std::uint64_t l = 1;
  std::uint64_t pk = 1;
  for (int k = 1; k <= n; ++k) {
    pk *= static_cast<std::uint64_t>(p);
    l = std::lcm(l, pk - 1);
  }
  std::uint64_t unipotent = 1;
  while (unipotent < static_cast<std::uint64_t>(n)) unipotent *= static_cast<std::uint64_t>(p);
  return l * unipotent;
}

FixedPointCount stabilized_fixed_point_count(const FqMatrix& a, int max_extension) {
  const std::uint64_t need = stabilizing_degree(a.field()->p(), a.rows());
  if (need > static_cast<std::uint64_t>(max_extension)) {
    fail(ErrorCode::kNotStabilized, "fixed-point count needs extension degree " + std::to_string(need) +
                                        " > bound " + std::to_string(max_extension));
  }
  FixedPointCount out;
  out.extension_degree = static_cast<int>(need);
  out.count = count_fixed_points(a, out.extension_degree);
  std::uint64_t c = out.count;
  while (c > 1) {
    c /= static_cast<std::uint64_t>(a.field()->p());
    ++out.log_p_count;
  }
  return out;
}

}  // namespace bt1
