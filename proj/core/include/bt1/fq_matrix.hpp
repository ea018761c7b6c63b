// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bt1/finite_field.hpp"

namespace bt1 {

/// Dense matrix over a finite field, 0-based (row, col) access.
class FqMatrix {
 public:
  using Elem = FiniteField::Elem;

  FqMatrix() = default;
  FqMatrix(FieldPtr field, int rows, int cols);
  static FqMatrix identity(FieldPtr field, int n);

  const FieldPtr& field() const noexcept { return field_; }
  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }

  Elem& at(int row, int col) { return data_[offset(row, col)]; }
  Elem at(int row, int col) const { return data_[offset(row, col)]; }

  FqMatrix operator*(const FqMatrix& other) const;
  FqMatrix operator+(const FqMatrix& other) const;
  FqMatrix operator-(const FqMatrix& other) const;
  friend bool operator==(const FqMatrix& a, const FqMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  /// Entrywise x -> x^(p^k); negative k applies the inverse Frobenius.
  FqMatrix twist(int k) const;
  /// Columns of *this followed by the columns of other.
  FqMatrix hconcat(const FqMatrix& other) const;
  int rank() const;
  bool is_zero() const;
  std::optional<FqMatrix> inverse() const;
  std::vector<Elem> apply(const std::vector<Elem>& v) const;
  std::string to_string() const;

 private:
  std::size_t offset(int row, int col) const {
    return static_cast<std::size_t>(row) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(col);
  }
  void require_same_field(const FqMatrix& other) const;

  FieldPtr field_;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Elem> data_;
};

/// Rank of an integer matrix reduced mod a prime p (rows of equal length).
int rank_mod_p(std::vector<std::vector<int>> m, int p);

}  // namespace bt1
