// SPDX-License-Identifier: Apache-2.0
#include "bt1/fq_matrix.hpp"

#include <sstream>
#include <utility>

#include "bt1/errors.hpp"

namespace bt1 {

FqMatrix::FqMatrix(FieldPtr field, int rows, int cols)
    : field_(std::move(field)), rows_(rows), cols_(cols),
      data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0) {
  if (!field_) fail(ErrorCode::kInternal, "matrix without field");
}

FqMatrix FqMatrix::identity(FieldPtr field, int n) {
  FqMatrix m(std::move(field), n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

void FqMatrix::require_same_field(const FqMatrix& other) const {
  if (field_ != other.field_) fail(ErrorCode::kInternal, "matrices over different fields");
}

FqMatrix FqMatrix::operator*(const FqMatrix& other) const {
  require_same_field(other);
  if (cols_ != other.rows_) fail(ErrorCode::kInternal, "matrix shape mismatch in product");
  const FiniteField& f = *field_;
  FqMatrix out(field_, rows_, other.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const Elem a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < other.cols_; ++j) {
        out.at(i, j) = f.add(out.at(i, j), f.mul(a, other.at(k, j)));
      }
    }
  }
  return out;
}

FqMatrix FqMatrix::operator+(const FqMatrix& other) const {
  require_same_field(other);
  if (rows_ != other.rows_ || cols_ != other.cols_) fail(ErrorCode::kInternal, "shape mismatch in sum");
  FqMatrix out = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = field_->add(data_[k], other.data_[k]);
  return out;
}

FqMatrix FqMatrix::operator-(const FqMatrix& other) const {
  require_same_field(other);
  if (rows_ != other.rows_ || cols_ != other.cols_) fail(ErrorCode::kInternal, "shape mismatch in difference");
  FqMatrix out = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = field_->sub(data_[k], other.data_[k]);
  return out;
}

FqMatrix FqMatrix::twist(int k) const {
  FqMatrix out = *this;
  for (auto& x : out.data_) x = field_->frob(x, k);
  return out;
}

FqMatrix FqMatrix::hconcat(const FqMatrix& other) const {
  require_same_field(other);
  if (rows_ != other.rows_) fail(ErrorCode::kInternal, "row mismatch in concatenation");
  FqMatrix out(field_, rows_, cols_ + other.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
    for (int j = 0; j < other.cols_; ++j) out.at(i, cols_ + j) = other.at(i, j);
  }
  return out;
}

int FqMatrix::rank() const {
  const FiniteField& f = *field_;
  FqMatrix m = *this;
  int rank = 0;
  for (int col = 0; col < cols_ && rank < rows_; ++col) {
    int pivot = -1;
    for (int row = rank; row < rows_; ++row) {
      if (m.at(row, col) != 0) {
        pivot = row;
        break;
      }
    }
    if (pivot < 0) continue;
    for (int j = 0; j < cols_; ++j) std::swap(m.at(pivot, j), m.at(rank, j));
    const Elem inv = f.inv(m.at(rank, col));
    for (int row = rank + 1; row < rows_; ++row) {
      const Elem factor = f.mul(m.at(row, col), inv);
      if (factor == 0) continue;
      for (int j = col; j < cols_; ++j) {
        m.at(row, j) = f.sub(m.at(row, j), f.mul(factor, m.at(rank, j)));
      }
    }
    ++rank;
  }
  return rank;
}

bool FqMatrix::is_zero() const {
  for (Elem x : data_) {
    if (x != 0) return false;
  }
  return true;
}

std::optional<FqMatrix> FqMatrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  const FiniteField& f = *field_;
  const int n = rows_;
  FqMatrix m = hconcat(identity(field_, n));
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int row = col; row < n; ++row) {
      if (m.at(row, col) != 0) {
        pivot = row;
        break;
      }
    }
    if (pivot < 0) return std::nullopt;
    for (int j = 0; j < 2 * n; ++j) std::swap(m.at(pivot, j), m.at(col, j));
    const Elem inv = f.inv(m.at(col, col));
    for (int j = 0; j < 2 * n; ++j) m.at(col, j) = f.mul(m.at(col, j), inv);
    for (int row = 0; row < n; ++row) {
      if (row == col) continue;
      const Elem factor = m.at(row, col);
      if (factor == 0) continue;
      for (int j = 0; j < 2 * n; ++j) m.at(row, j) = f.sub(m.at(row, j), f.mul(factor, m.at(col, j)));
    }
  }
  FqMatrix out(field_, n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out.at(i, j) = m.at(i, n + j);
  }
  return out;
}

std::vector<FqMatrix::Elem> FqMatrix::apply(const std::vector<Elem>& v) const {
  if (static_cast<int>(v.size()) != cols_) fail(ErrorCode::kInternal, "vector length mismatch");
  std::vector<Elem> out(static_cast<std::size_t>(rows_), 0);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      out[static_cast<std::size_t>(i)] =
          field_->add(out[static_cast<std::size_t>(i)], field_->mul(at(i, j), v[static_cast<std::size_t>(j)]));
    }
  }
  return out;
}

std::string FqMatrix::to_string() const {
  std::ostringstream out;
  out << '[';
  for (int i = 0; i < rows_; ++i) {
    out << (i ? ",[" : "[");
    for (int j = 0; j < cols_; ++j) out << (j ? "," : "") << at(i, j);
    out << ']';
  }
  out << ']';
  return out.str();
}

int rank_mod_p(std::vector<std::vector<int>> m, int p) {
  const int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  const int cols = static_cast<int>(m[0].size());
  auto inv_mod = [p](long long a) {
    long long result = 1;
    long long base = a % p;
    long long e = p - 2;
    while (e > 0) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return result;
  };
  for (auto& row : m) {
    for (int& x : row) x = ((x % p) + p) % p;
  }
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int row = rank; row < rows; ++row) {
      if (m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] != 0) {
        pivot = row;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[static_cast<std::size_t>(pivot)], m[static_cast<std::size_t>(rank)]);
    auto& prow = m[static_cast<std::size_t>(rank)];
    const long long inv = inv_mod(prow[static_cast<std::size_t>(col)]);
    for (int row = rank + 1; row < rows; ++row) {
      auto& cur = m[static_cast<std::size_t>(row)];
      const long long factor = cur[static_cast<std::size_t>(col)] * inv % p;
      if (factor == 0) continue;
      for (int j = col; j < cols; ++j) {
        const auto sj = static_cast<std::size_t>(j);
        cur[sj] = static_cast<int>(((cur[sj] - factor * prow[sj]) % p + p) % p);
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace bt1
