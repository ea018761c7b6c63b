// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bt1 {

/// An ordered pair (i, j) of 1-based indices, i.e. the matrix unit e_{i,j}.
struct Pair {
  int i = 0;
  int j = 0;

  friend auto operator<=>(const Pair&, const Pair&) = default;
};

std::string to_string(const Pair& pair);

/// A permutation of {1, ..., r} stored in one-line notation.
class Permutation {
 public:
  Permutation() = default;

  /// Throws Error(kInvalidDatum) unless `images` lists every value 1..r once.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int r);
  /// The r-cycle (1 2 ... r).
  static Permutation cycle(int r);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }

  /// pi^k(i) for k >= 0.
  int power(int i, int k) const;
  Pair apply(Pair pair, int k = 1) const {
    return {power(pair.i, k), power(pair.j, k)};
  }

  Permutation inverse() const;
  /// (*this * other)(i) = (*this)(other(i)).
  Permutation compose(const Permutation& other) const;
  Permutation conjugate_by(const Permutation& rho) const;  // rho^-1 pi rho

  std::span<const int> images() const noexcept { return images_; }
  std::vector<std::vector<int>> cycles() const;

  std::string one_line() const;     // "[2,3,1]"
  std::string cycle_string() const; // "(1 2 3)", fixed points omitted; "()" for id

  /// Advances to the lexicographically next permutation; false after the last.
  bool next();

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// Parses either one-line notation "[2,3,1]" / "2 3 1" or cycle notation
/// "(1 2 3)(4 5)". Cycle notation needs `degree` unless the largest mentioned
/// point is the degree. Throws Error(kParse).
Permutation parse_permutation(std::string_view text, std::optional<int> degree = std::nullopt);

/// A BT_1 class presented by (c, d, pi): F acts by pi on indices <= c, V on
/// indices > c.
class Bt1Datum {
 public:
  /// Throws Error(kInvalidDatum) if c < 1, d < 1 or pi.size() != c + d.
  Bt1Datum(int c, int d, Permutation pi);

  int c() const noexcept { return c_; }
  int d() const noexcept { return d_; }
  int r() const noexcept { return c_ + d_; }
  const Permutation& pi() const noexcept { return pi_; }

  /// Indices 1..c carry the letter F; c+1..r carry V.
  bool is_f_index(int i) const noexcept { return i <= c_; }

  friend bool operator==(const Bt1Datum&, const Bt1Datum&) = default;

 private:
  int c_;
  int d_;
  Permutation pi_;
};

/// All permutations of S_r in lexicographic order (r! entries).
std::vector<Permutation> all_permutations(int r);

}  // namespace bt1
