// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "bt1/pair_table.hpp"
#include "bt1/rational.hpp"

namespace bt1 {

enum class PathKind { kGamma, kDelta };

/// A Gamma path (ZeroZero steps then one PlusTwo step) or a Delta path (a
/// Gamma path followed by one more ZeroZero step).
struct Path {
  std::vector<int> vertices;
  PathKind kind = PathKind::kGamma;
  bool in_gamma1 = false;
  bool in_delta1 = false;
  /// t -> number of ZeroZero steps of pi-order t.
  std::map<int, int> nt;

  bool selected() const noexcept { return in_gamma1 || in_delta1; }
  int zero_zero_steps() const;
};

struct PathLimits {
  std::size_t max_paths = 10'000'000;
};

/// Every Gamma and Delta path, sorted by (kind, vertices). Throws
/// Error(kPathExplosion) past `limits.max_paths`.
std::vector<Path> enumerate_paths(const PairTable& table, PathLimits limits = {});

/// sum_t n_t p^{-t}.
Rational kappa_of_path(const Path& path, int p);

struct KappaReport {
  int p = 0;
  Rational kappa_pi;
  std::optional<Path> witness;
  std::optional<Rational> kappa_class;
  std::optional<bool> condition_c;
  std::optional<Rational> dual_kappa_class;
};

/// Max of kappa over Gamma_1 u Delta_1 (0 when empty). The witness is the first
/// maximiser in enumeration order.
KappaReport kappa_of_perm(const Bt1Datum& datum, int p, PathLimits limits = {});
KappaReport kappa_of_perm(const PairTable& table, int p, PathLimits limits = {});

/// Default upper bound on r for factorial enumerations; BT1_MAX_R overrides.
int default_max_r();

/// Every pi' in S_r whose Kraft invariant equals that of `datum`, sorted.
/// Throws Error(kRTooLarge) when r > max_r.
std::vector<Permutation> class_representatives(const Bt1Datum& datum, int max_r = default_max_r());

/// Minimum of kappa_of_perm over the class representatives.
Rational kappa_of_class(const Bt1Datum& datum, int p, int max_r = default_max_r());

/// kappa_class(datum) < 1 or kappa_class(dual) < 1; the report carries both.
KappaReport condition_c(const Bt1Datum& datum, int p, int max_r = default_max_r());

/// Largest a such that J splits into a parts cyclically permuted by pi with
/// {c+1..r} inside the first part.
int scalar_action_period(const Bt1Datum& datum);

}  // namespace bt1
