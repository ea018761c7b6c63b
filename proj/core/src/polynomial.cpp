// SPDX-License-Identifier: Apache-2.0
#include "bt1/polynomial.hpp"

#include <algorithm>
#include <utility>

#include "bt1/errors.hpp"

namespace bt1 {

FqPoly::FqPoly(FieldPtr field, std::vector<Elem> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  trim();
}

FqPoly FqPoly::x(FieldPtr field) { return FqPoly(std::move(field), {0, 1}); }

void FqPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

FqPoly::Elem FqPoly::coeff(int k) const {
  return k >= 0 && k < static_cast<int>(coeffs_.size()) ? coeffs_[static_cast<std::size_t>(k)] : 0;
}

FqPoly FqPoly::operator+(const FqPoly& o) const {
  std::vector<Elem> out(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k] = field_->add(coeff(static_cast<int>(k)), o.coeff(static_cast<int>(k)));
  }
  return FqPoly(field_, std::move(out));
}

FqPoly FqPoly::operator-(const FqPoly& o) const {
  std::vector<Elem> out(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k] = field_->sub(coeff(static_cast<int>(k)), o.coeff(static_cast<int>(k)));
  }
  return FqPoly(field_, std::move(out));
}

FqPoly FqPoly::operator*(const FqPoly& o) const {
  if (is_zero() || o.is_zero()) return FqPoly(field_);
  std::vector<Elem> out(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      out[i + j] = field_->add(out[i + j], field_->mul(coeffs_[i], o.coeffs_[j]));
    }
  }
  return FqPoly(field_, std::move(out));
}

FqPoly FqPoly::operator%(const FqPoly& modulus) const {
  if (modulus.is_zero()) fail(ErrorCode::kInternal, "polynomial division by zero");
  std::vector<Elem> rem = coeffs_;
  const int dm = modulus.degree();
  const Elem lead_inv = field_->inv(modulus.coeffs_.back());
  for (int k = static_cast<int>(rem.size()) - 1; k >= dm; --k) {
    const Elem c = field_->mul(rem[static_cast<std::size_t>(k)], lead_inv);
    if (c == 0) continue;
    for (int t = 0; t <= dm; ++t) {
      auto& slot = rem[static_cast<std::size_t>(k - dm + t)];
      slot = field_->sub(slot, field_->mul(c, modulus.coeffs_[static_cast<std::size_t>(t)]));
    }
  }
  return FqPoly(field_, std::move(rem));
}

FqPoly FqPoly::monic() const {
  if (is_zero()) return *this;
  const Elem inv = field_->inv(coeffs_.back());
  std::vector<Elem> out = coeffs_;
  for (auto& c : out) c = field_->mul(c, inv);
  return FqPoly(field_, std::move(out));
}

FqPoly FqPoly::powmod(std::uint64_t n, const FqPoly& modulus) const {
  FqPoly result(field_, {1});
  result = result % modulus;
  FqPoly base = *this % modulus;
  while (n > 0) {
    if (n & 1) result = (result * base) % modulus;
    base = (base * base) % modulus;
    n >>= 1;
  }
  return result;
}

FqPoly gcd(FqPoly a, FqPoly b) {
  while (!b.is_zero()) {
    FqPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

namespace {

// x^(q^k) mod f.
FqPoly frobenius_power_of_x(const FqPoly& f, int k) {
  const std::uint64_t q = f.field()->q();
  FqPoly cur = FqPoly::x(f.field()) % f;
  for (int s = 0; s < k; ++s) cur = cur.powmod(q, f);
  return cur;
}

}  // namespace

bool is_irreducible(const FqPoly& f) {
  const int n = f.degree();
  if (n < 1) return false;
  if (n == 1) return true;
  const FqPoly x = FqPoly::x(f.field()) % f;
  if (!(frobenius_power_of_x(f, n) == x)) return false;
  for (std::uint64_t l : prime_factors(static_cast<std::uint64_t>(n))) {
    const FqPoly h = frobenius_power_of_x(f, n / static_cast<int>(l)) - x;
    if (gcd(f, h).degree() != 0) return false;
  }
  return true;
}

TowerField::TowerField(FieldPtr base, int degree)
    : base_(std::move(base)), degree_(degree), modulus_(base_) {
  if (degree < 1) fail(ErrorCode::kInvalidDatum, "extension degree must be positive");
  const std::uint64_t q = base_->q();
  std::vector<Elem> low(static_cast<std::size_t>(degree), 0);
  bool found = false;
  while (!found) {
    std::vector<Elem> coeffs = low;
    coeffs.push_back(1);
    FqPoly candidate(base_, coeffs);
    if (is_irreducible(candidate)) {
      modulus_ = candidate;
      found = true;
      break;
    }
    std::size_t k = 0;
    while (k < low.size() && ++low[k] == q) low[k++] = 0;
    if (k == low.size()) break;
  }
  if (!found) fail(ErrorCode::kInternal, "no irreducible polynomial found");

  const FqPoly yp = FqPoly::x(base_).powmod(static_cast<std::uint64_t>(base_->p()), modulus_);
  FqPoly cur(base_, {1});
  for (int k = 0; k < degree_; ++k) {
    Value v = zero();
    for (int t = 0; t < degree_; ++t) v[static_cast<std::size_t>(t)] = cur.coeff(t);
    y_pow_p_.push_back(std::move(v));
    cur = (cur * yp) % modulus_;
  }
}

TowerField::Value TowerField::embed(Elem a) const {
  Value v = zero();
  v[0] = a;
  return v;
}

TowerField::Value TowerField::add(const Value& a, const Value& b) const {
  Value out = zero();
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = base_->add(a[k], b[k]);
  return out;
}

TowerField::Value TowerField::sub(const Value& a, const Value& b) const {
  Value out = zero();
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = base_->sub(a[k], b[k]);
  return out;
}

TowerField::Value TowerField::scale(Elem a, const Value& b) const {
  Value out = zero();
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = base_->mul(a, b[k]);
  return out;
}

TowerField::Value TowerField::mul(const Value& a, const Value& b) const {
  const FqPoly prod = (FqPoly(base_, a) * FqPoly(base_, b)) % modulus_;
  Value out = zero();
  for (int k = 0; k < degree_; ++k) out[static_cast<std::size_t>(k)] = prod.coeff(k);
  return out;
}

TowerField::Value TowerField::frob(const Value& a) const {
  Value out = zero();
  for (int k = 0; k < degree_; ++k) {
    const Elem c = base_->frob(a[static_cast<std::size_t>(k)], 1);
    if (c == 0) continue;
    out = add(out, scale(c, y_pow_p_[static_cast<std::size_t>(k)]));
  }
  return out;
}

}  // namespace bt1
