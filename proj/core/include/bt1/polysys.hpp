// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bt1/kappa.hpp"
#include "bt1/pair_table.hpp"

namespace bt1 {

/// coeff * prod a_pair^e * prod x_pair^e with coeff in [1, p).
struct Monomial {
  int coeff = 1;
  std::map<Pair, std::int64_t> a_powers;
  std::map<Pair, std::int64_t> x_powers;

  /// Ordering key: (a_powers, x_powers); coefficients are ignored.
  friend bool same_support(const Monomial& m, const Monomial& n) {
    return m.a_powers == n.a_powers && m.x_powers == n.x_powers;
  }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

bool support_less(const Monomial& m, const Monomial& n);

/// x_var^lhs_degree = sum of rhs.
struct Equation {
  Pair var;
  std::int64_t lhs_degree = 1;
  /// pi-order of var for generated systems; the exponent of p in lhs_degree.
  std::optional<int> nu;
  std::vector<Monomial> rhs;
};

/// Equations sorted by var, monomials sorted by support with like terms
/// combined mod p.
struct PolySystem {
  int p = 2;
  std::vector<Equation> equations;

  const Equation* find(Pair var) const;
  std::vector<Pair> variables() const;
};

/// Sorts equations and monomials, merges like terms, drops zero coefficients.
void canonicalize(PolySystem& system);

/// One summand produced before like terms are merged, with the step that
/// generated it.
struct RawTerm {
  enum class Source { kGamma1, kDelta1, kLinear };
  Pair equation;
  int sign = 1;
  Monomial monomial;  // coeff 1; sign carried separately
  Source source = Source::kLinear;
  std::vector<int> path;  // vertices for Gamma1/Delta1 terms
};

/// The level-1 pair pi(origin) and its exponent p^(eta-1) substituted for a
/// ZeroZero pair.
struct QFactor {
  Pair var;
  std::int64_t exponent = 1;
};
QFactor q_expansion(const PairTable& table, Pair zero_zero_pair, int p);

/// Level-1 pairs of ZeroZero u PlusOne: the unknowns.
std::vector<Pair> x_variables(const PairTable& table);

std::vector<RawTerm> gen_system_terms(const PairTable& table, int p, PathLimits limits = {});
PolySystem gen_system(const PairTable& table, int p, PathLimits limits = {});

struct EliminationReport {
  PolySystem system;
  std::vector<Pair> eliminated;
  /// Degree-1 variables left in place because they occur on their own RHS.
  std::vector<Pair> cyclic_linear;
};

/// Substitutes every degree-1 equation into the others until none is left
/// that can be removed.
EliminationReport eliminate_linear(const PolySystem& system);

/// Text form, one equation per line: "x[2,1]^4 = + a[5,3]*x[4,5] + a[4,3]".
std::string to_text(const PolySystem& system);
std::string to_text(const Monomial& monomial, int p);
/// Inverse of to_text; throws Error(kParse).
PolySystem parse_system(std::string_view text, int p);

}  // namespace bt1
