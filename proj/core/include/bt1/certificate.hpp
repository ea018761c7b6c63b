// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bt1/polysys.hpp"
#include "bt1/rational.hpp"

namespace bt1 {

struct Violation {
  Pair equation;
  Monomial monomial;
  Rational weighted_degree;
  Rational bound;  // mu_l * d_l
};

/// Weights on the unknowns; a-variables carry no weight.
struct WeightCertificate {
  std::map<Pair, Rational> weights;
  bool satisfied = false;
  std::vector<Violation> violations;
  int cover_exponent = 0;  // |ZeroZero|
  BigInt cover_degree = 1; // p^cover_exponent
};

/// Independent check of mu_l * d_l > sum_i mu_i v_i(m) for every monomial m of
/// every equation l. Weights must be positive and cover every variable that
/// occurs; otherwise the certificate is rejected with no violations listed.
WeightCertificate check_certificate(const PolySystem& system, const std::map<Pair, Rational>& weights);

/// mu_l = p^(nubar - nu_l) with nubar the largest order among the unknowns.
std::map<Pair, Rational> default_weights(const PolySystem& system);

/// check_certificate with default weights; cover degree p^|ZeroZero|.
WeightCertificate default_certificate(const PolySystem& system, const PairTable& table, int p);

/// Default bound on the number of LP variables.
inline constexpr int kDefaultLpCeiling = 64;

/// Exact LP for mu_l d_l >= sum mu_i v_i + 1, mu >= 1. Throws
/// Error(kDimensionCeiling) past `max_vars`.
std::optional<std::map<Pair, Rational>> weight_search(const PolySystem& system,
                                                      int max_vars = kDefaultLpCeiling);

enum class Verdict { kCertifiedDefault, kCertifiedSearched, kNotCertified };
std::string_view to_string(Verdict verdict);

struct FinitenessReport {
  int p = 0;
  Verdict verdict = Verdict::kNotCertified;
  Rational kappa_pi;
  PolySystem system;
  WeightCertificate default_cert;
  std::optional<EliminationReport> elimination;
  std::optional<WeightCertificate> searched_cert;
  int cover_exponent = 0;
  BigInt cover_degree = 1;
  /// The degree p^|ZeroZero| is claimed only for the default route.
  bool degree_asserted = false;
};

/// gen_system, default certificate; on failure eliminate_linear, weight_search
/// and the independent checker.
FinitenessReport finiteness_report(const Bt1Datum& datum, int p);

}  // namespace bt1
