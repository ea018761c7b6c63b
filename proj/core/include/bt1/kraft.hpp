// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "bt1/permutation.hpp"

namespace bt1 {

/// Multiset of primitive cyclic words over {F, V}; every word is stored as its
/// least rotation and the list is sorted. Letter counts give (c, d).
class KraftInvariant {
 public:
  KraftInvariant() = default;

  /// Canonicalises arbitrary cyclic words: proper powers w^k become k copies
  /// of w, each word is rotated to its least rotation. Throws Error(kParse) on
  /// letters other than F and V or empty words.
  static KraftInvariant from_words(const std::vector<std::string>& words);
  /// Parses the catalog key, e.g. ["F","FV"].
  static KraftInvariant parse(std::string_view key);

  const std::vector<std::string>& words() const noexcept { return words_; }
  int c() const noexcept { return c_; }
  int d() const noexcept { return d_; }
  int r() const noexcept { return c_ + d_; }
  std::size_t multiplicity(std::string_view word) const;

  /// Canonical class key: the JSON list of words, e.g. ["F","FV","FVV"].
  std::string key() const;

  friend bool operator==(const KraftInvariant&, const KraftInvariant&) = default;
  friend auto operator<=>(const KraftInvariant& a, const KraftInvariant& b) {
    return a.words_ <=> b.words_;
  }

 private:
  std::vector<std::string> words_;
  int c_ = 0;
  int d_ = 0;
};

/// Least rotation of a cyclic word.
std::string least_rotation(std::string_view word);
/// Shortest w with word = w^k.
std::string primitive_root(std::string_view word);

/// Reads every cycle of pi as a cyclic word (F at indices <= c, V above).
KraftInvariant kraft_invariant(const Bt1Datum& datum);

/// Cartier dual: swap F and V, reverse each word, recanonicalise.
KraftInvariant dual(const KraftInvariant& inv);

/// A datum realising `inv`: words are laid out as cycles, F letters take the
/// indices 1..c and V letters c+1..r in reading order.
Bt1Datum representative(const KraftInvariant& inv);

/// All classes of S_{c+d} keyed by invariant, each with its sorted members.
class ClassIndex {
 public:
  /// Throws Error(kRTooLarge) when c + d > max_r.
  ClassIndex(int c, int d, int max_r);

  int c() const noexcept { return c_; }
  int d() const noexcept { return d_; }
  const std::map<KraftInvariant, std::vector<Permutation>>& classes() const noexcept {
    return classes_;
  }
  const std::vector<Permutation>& members(const KraftInvariant& inv) const;

 private:
  int c_;
  int d_;
  std::map<KraftInvariant, std::vector<Permutation>> classes_;
};

/// Number of distinct Kraft invariants over S_{c+d}.
std::size_t class_count(int c, int d, int max_r);

}  // namespace bt1
