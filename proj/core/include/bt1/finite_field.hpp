// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "bt1/rng.hpp"

namespace bt1 {

/// GF(p^e) with elements encoded as integers sum c_k p^k (c_k the coefficient
/// of x^k modulo the defining polynomial). The defining polynomial is the
/// first monic primitive polynomial of degree e in the order of increasing
/// encoded lower coefficients, so x generates the multiplicative group.
class FiniteField {
 public:
  using Elem = std::uint64_t;

  /// Shared, immutable instance per (p, e). Throws Error(kInvalidDatum) for a
  /// non-prime p, e < 1, or p^e >= 2^40.
  static std::shared_ptr<const FiniteField> get(int p, int e);

  int p() const noexcept { return p_; }
  int e() const noexcept { return e_; }
  std::uint64_t q() const noexcept { return q_; }
  /// Coefficients low to high, leading 1 included.
  const std::vector<int>& modulus() const noexcept { return modulus_; }
  std::string modulus_string() const;

  Elem from_int(long long v) const;  // image of an integer in the prime field
  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;  // throws Error(kInvalidDatum) on 0
  Elem pow(Elem a, std::uint64_t n) const;
  /// a^(p^k); k may be negative (inverse Frobenius).
  Elem frob(Elem a, int k = 1) const;
  Elem random(CounterRng& rng) const { return rng.below(q_); }

  std::vector<int> digits(Elem a) const;
  Elem from_digits(const std::vector<int>& digits) const;

 private:
  FiniteField(int p, int e);
  Elem mul_poly(Elem a, Elem b) const;

  int p_;
  int e_;
  std::uint64_t q_;
  std::vector<int> modulus_;
  std::vector<std::uint64_t> place_;  // p^k
  bool tables_ = false;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
};

using FieldPtr = std::shared_ptr<const FiniteField>;

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

}  // namespace bt1
