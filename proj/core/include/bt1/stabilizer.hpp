// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bt1/fq_matrix.hpp"
#include "bt1/pair_table.hpp"

namespace bt1 {

/// The monomial y_var^(p^level); var is a MinusOne pair.
struct FormalTerm {
  Pair var;
  int level = 0;
  friend bool operator==(const FormalTerm&, const FormalTerm&) = default;
};

/// Identity plus at most one formal term per off-diagonal position.
struct FormalMatrix {
  int r = 0;
  std::map<Pair, FormalTerm> terms;
  /// Substitutes y values (indexed like `variables`) into 1 + sum of terms.
  FqMatrix instantiate(const FieldPtr& field, const std::map<Pair, FiniteField::Elem>& y) const;
};

/// Formal stabiliser matrices: the orbit walk of each MinusOne pair (i,j) of
/// order nu puts y^(p^l) at pi^l(i,j), for l in [1,nu] (h12), [1,nu-1] (h2) and
/// [0,nu-1] (h23).
struct StabilizerParam {
  std::vector<Pair> variables;  // MinusOne pairs, lexicographic
  FormalMatrix h12;
  FormalMatrix h2;
  FormalMatrix h23;
};

StabilizerParam stabilizer_param(const PairTable& table);

struct StabilizerReport {
  bool ok = true;
  int trials = 0;
  std::uint64_t seed = 0;
  int p = 0;
  int e = 0;
  std::optional<std::string> counterexample;
  /// Distinct instantiated triples; exhaustive when q^|MinusOne| <= 2^16,
  /// otherwise over the sampled assignments.
  std::uint64_t distinct_triples = 0;
  std::uint64_t expected_triples = 0;
  bool exhaustive = false;
};

/// Random instantiations over F_{p^e}: h2 inverted by the finite geometric
/// series in its nilpotent part, the twist identity
/// h12(pi(i), pi(j)) = h23(i, j)^p, and injectivity of y -> (h12, h2, h23).
StabilizerReport verify_stabilizer(const PairTable& table, int p, int e, int trials, std::uint64_t seed);

}  // namespace bt1
