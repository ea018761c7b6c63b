// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "bt1/finite_field.hpp"

namespace bt1 {

/// Univariate polynomials over F_q, coefficients low to high, no trailing zeros.
class FqPoly {
 public:
  using Elem = FiniteField::Elem;

  explicit FqPoly(FieldPtr field, std::vector<Elem> coeffs = {});
  static FqPoly x(FieldPtr field);

  const FieldPtr& field() const noexcept { return field_; }
  const std::vector<Elem>& coeffs() const noexcept { return coeffs_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for 0
  bool is_zero() const noexcept { return coeffs_.empty(); }
  Elem coeff(int k) const;

  FqPoly operator+(const FqPoly& o) const;
  FqPoly operator-(const FqPoly& o) const;
  FqPoly operator*(const FqPoly& o) const;
  FqPoly operator%(const FqPoly& modulus) const;
  friend bool operator==(const FqPoly& a, const FqPoly& b) { return a.coeffs_ == b.coeffs_; }

  FqPoly monic() const;
  FqPoly powmod(std::uint64_t n, const FqPoly& modulus) const;

 private:
  void trim();
  FieldPtr field_;
  std::vector<Elem> coeffs_;
};

FqPoly gcd(FqPoly a, FqPoly b);

/// Rabin's test: f of degree n is irreducible over F_q iff f | x^(q^n) - x and
/// gcd(x^(q^(n/l)) - x, f) = 1 for every prime l | n.
bool is_irreducible(const FqPoly& f);

/// F_{q^N} = F_q[y]/(g), g the first monic irreducible of degree N in the order
/// of increasing encoded lower coefficients.
class TowerField {
 public:
  using Elem = FiniteField::Elem;
  using Value = std::vector<Elem>;  // N coefficients over F_q

  TowerField(FieldPtr base, int degree);

  const FieldPtr& base() const noexcept { return base_; }
  int degree() const noexcept { return degree_; }
  const FqPoly& modulus() const noexcept { return modulus_; }

  Value zero() const { return Value(static_cast<std::size_t>(degree_), 0); }
  Value embed(Elem a) const;
  Value add(const Value& a, const Value& b) const;
  Value sub(const Value& a, const Value& b) const;
  Value mul(const Value& a, const Value& b) const;
  Value scale(Elem a, const Value& b) const;
  /// z -> z^p.
  Value frob(const Value& a) const;

 private:
  FieldPtr base_;
  int degree_;
  FqPoly modulus_;
  std::vector<Value> y_pow_p_;  // y^(p k) mod g for k < N
};

}  // namespace bt1
