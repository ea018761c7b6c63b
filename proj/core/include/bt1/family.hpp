// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bt1/semilinear.hpp"

namespace bt1 {

/// A point (x1, x2, x3, x4) of the four-parameter family.
using FamilyPoint = std::array<FiniteField::Elem, 4>;

/// The 2x2 block [[x1, x2], [x3, x4]].
FqMatrix family_block(const FieldPtr& field, const FamilyPoint& x);

/// Height-4 BT_1 pair with F columns (g e1, g e2, 0, 0), g = [[A1, I], [I, 0]]
/// and V fixed by ker F = im V, ker V = im F.
SemilinearPair family_pair(int p, int e, const FamilyPoint& x);

enum class FamilyStratum {
  kGeneric,       // x1 x4 != x2 x3
  kHypersurface,  // on x1 x4 = x2 x3, x1 != 0, off the locus below
  kLocus,         // on the hypersurface, x1 != 0 and x1^p + x4 x3^(p-1) = 0
  kOrigin,        // (0, 0, 0, x4) with x4 != 0
  kOffChart,      // x1 = 0 on the hypersurface, not of the form above
};
std::string to_string(FamilyStratum stratum);

FamilyStratum family_stratum(const FiniteField& field, const FamilyPoint& x);
/// 2, 1, 0, 1 for the first four strata; none off the chart.
std::optional<int> family_predicted_rank(FamilyStratum stratum);

struct FamilyEvaluation {
  FamilyPoint x{};
  FamilyStratum stratum = FamilyStratum::kGeneric;
  std::optional<int> predicted;
  int stable_rank = 0;
  std::optional<int> oracle_rank;  // log_p of the stabilised fixed-point count
  bool ok = true;                  // prediction and oracle agree with stable_rank
};

FamilyEvaluation family_evaluate(int p, int e, const FamilyPoint& x, bool with_oracle);

struct FamilyReport {
  int p = 0;
  int e = 0;
  std::string modulus;
  std::uint64_t seed = 0;
  std::vector<FamilyEvaluation> points;
  int mismatches = 0;
};

/// Samples cycle through: uniform points, points on the hypersurface with
/// x1 != 0 (x4 = x2 x3 / x1), and points on the locus
/// (x2 = -x1^(p+1) / x3^p, x4 = x2 x3 / x1).
FamilyReport family_sample(int p, int e, int samples, std::uint64_t seed, bool with_oracle);

}  // namespace bt1
