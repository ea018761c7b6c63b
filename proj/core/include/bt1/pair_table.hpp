// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "bt1/permutation.hpp"

namespace bt1 {

enum class Region { kPlus, kZero, kMinus };

/// Refinement of the three regions along the componentwise pi-orbits.
/// kZeroPlain collects Zero-region pairs outside ZeroZero (diagonal included).
enum class Refined { kPlusOne, kPlusTwo, kZeroZero, kZeroPlain, kMinusOne, kMinusTwo };

std::string_view to_string(Region region);
std::string_view to_string(Refined refined);
Refined parse_refined(std::string_view name);

/// Plus iff j <= c < i, Minus iff i <= c < j, Zero otherwise.
Region classify_region(const Bt1Datum& datum, Pair pair);

/// Region of every pair, indexed (i-1)*r + (j-1).
std::vector<Region> classify_regions(const Bt1Datum& datum);

/// Least s >= 1 with pi^s(pair) in Plus or Minus. Throws Error(kNotMinusPair).
int pi_order(const Bt1Datum& datum, Pair pair);

/// Refined classification of J x J with pi-orders and pi-levels.
class PairTable {
 public:
  explicit PairTable(Bt1Datum datum);

  const Bt1Datum& datum() const noexcept { return datum_; }
  int c() const noexcept { return datum_.c(); }
  int d() const noexcept { return datum_.d(); }
  int r() const noexcept { return datum_.r(); }

  Region region(Pair p) const { return region_[index(p)]; }
  Refined refined(Pair p) const { return refined_[index(p)]; }
  bool is(Pair p, Refined kind) const { return refined(p) == kind; }

  /// Defined on the Minus region and on PlusOne, ZeroZero, MinusOne.
  std::optional<int> nu(Pair p) const { return opt(nu_[index(p)]); }
  /// Defined on PlusOne, ZeroZero, MinusOne.
  std::optional<int> eta(Pair p) const { return opt(eta_[index(p)]); }

  /// The MinusOne pair whose orbit walk passes through `p` (p itself for
  /// MinusOne); only for PlusOne, ZeroZero, MinusOne.
  std::optional<Pair> origin(Pair p) const;

  /// Pairs of one kind in lexicographic order.
  std::vector<Pair> pairs(Refined kind) const;
  std::size_t count(Refined kind) const;

 private:
  std::size_t index(Pair p) const {
    return static_cast<std::size_t>((p.i - 1) * r() + (p.j - 1));
  }
  static std::optional<int> opt(int v) { return v < 0 ? std::nullopt : std::optional<int>(v); }

  Bt1Datum datum_;
  std::vector<Region> region_;
  std::vector<Refined> refined_;
  std::vector<int> nu_;
  std::vector<int> eta_;
  std::vector<Pair> origin_;
};

/// Length of the longest chain (i1,i2),(i2,i3),... of ZeroZero pairs.
int composable_chain_max(const PairTable& table);

/// Longest ZeroZero chain that either ends at a vertex v with some pair
/// (v, x) in `region` (`ends_before_region`), or starts at a vertex v with
/// some pair (x, v) in `region`. Chains of length 0 count; -1 when no vertex
/// qualifies.
int chain_next_to_region(const PairTable& table, Region region, bool ends_before_region);

}  // namespace bt1
