// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>

#include "bt1/fq_matrix.hpp"
#include "bt1/permutation.hpp"

namespace bt1 {

/// Frobenius-linear F(v) = f * v^(p) and inverse-Frobenius-linear
/// V(v) = (v_twisted * v)^(1/p) on F_q^r.
struct SemilinearPair {
  FqMatrix f;
  FqMatrix v_twisted;

  int r() const noexcept { return f.rows(); }
  const FieldPtr& field() const noexcept { return f.field(); }
};

/// F e_i = e_pi(i) for i <= c, V e_pi(i) = e_i for i > c, over F_p (or F_{p^e}).
SemilinearPair build_pair(const Bt1Datum& datum, int p, int e = 1);

/// rank F + rank V = r and both composites F V, V F vanish.
bool is_bt1(const SemilinearPair& pair);
/// Throws Error(kNotBt1) unless is_bt1.
void require_bt1(const SemilinearPair& pair);

/// Rank of the r-th iterate of F: f f^(p) ... f^(p^(r-1)).
int p_rank(const SemilinearPair& pair);
/// r - dim(im F + im V).
int a_number(const SemilinearPair& pair);

/// A semilinear map v -> m * v^(p^twist).
struct TwistedMap {
  FqMatrix m;
  int twist = 0;
};

/// x o y (apply y first).
TwistedMap compose(const TwistedMap& x, const TwistedMap& y);

/// Rank of every composite word in F and V of length 1..max_length. Words are
/// read left to right as operator products, so "FV" means F after V.
std::map<std::string, int> word_rank_profile(const SemilinearPair& pair, int max_length);

}  // namespace bt1
