// SPDX-License-Identifier: Apache-2.0
#include "bt1/finite_field.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "bt1/errors.hpp"

namespace bt1 {
namespace {

constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 40;
constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 20;

using Poly = std::vector<int>;  // coefficients low to high over F_p

// a * b mod f over F_p, with deg a, deg b < deg f and f monic.
Poly mulmod(const Poly& a, const Poly& b, const Poly& f, int p) {
  const std::size_t n = f.size() - 1;
  std::vector<long long> prod(2 * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) prod[i + j] = (prod[i + j] + 1LL * a[i] * b[j]) % p;
  }
  for (std::size_t k = 2 * n - 1; k >= n; --k) {
    const long long c = prod[k] % p;
    if (c == 0) continue;
    prod[k] = 0;
    for (std::size_t t = 0; t < n; ++t) {
      prod[k - n + t] = ((prod[k - n + t] - c * f[t]) % p + p) % p;
    }
  }
  Poly out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<int>(prod[i] % p);
  return out;
}

Poly powmod_x(std::uint64_t k, const Poly& f, int p) {
  const std::size_t n = f.size() - 1;
  Poly result(n, 0);
  result[0] = 1;
  Poly base(n, 0);
  if (n == 1) {
    base[0] = ((-f[0]) % p + p) % p;
  } else {
    base[1] = 1;
  }
  while (k > 0) {
    if (k & 1) result = mulmod(result, base, f, p);
    base = mulmod(base, base, f, p);
    k >>= 1;
  }
  return result;
}

bool is_one(const Poly& a) {
  if (a.empty() || a[0] != 1) return false;
  for (std::size_t i = 1; i < a.size(); ++i) {
    if (a[i] != 0) return false;
  }
  return true;
}

// x has multiplicative order q - 1 modulo f. This forces f irreducible: the
// unit group of F_p[x]/(f) has fewer than q - 1 elements otherwise.
bool is_primitive(const Poly& f, int p, std::uint64_t q, const std::vector<std::uint64_t>& factors) {
  if (f[0] == 0) return false;
  if (!is_one(powmod_x(q - 1, f, p))) return false;
  for (std::uint64_t l : factors) {
    if (is_one(powmod_x((q - 1) / l, f, p))) return false;
  }
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::shared_ptr<const FiniteField> FiniteField::get(int p, int e) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::shared_ptr<const FiniteField>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find({p, e});
  if (it != cache.end()) return it->second;
  auto field = std::shared_ptr<const FiniteField>(new FiniteField(p, e));
  cache.emplace(std::make_pair(p, e), field);
  return field;
}

FiniteField::FiniteField(int p, int e) : p_(p), e_(e), q_(1) {
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) {
    fail(ErrorCode::kInvalidDatum, "field characteristic must be prime, got " + std::to_string(p));
  }
  if (e < 1) fail(ErrorCode::kInvalidDatum, "extension degree must be positive");
  for (int k = 0; k < e; ++k) {
    place_.push_back(q_);
    q_ *= static_cast<std::uint64_t>(p);
    if (q_ >= kMaxOrder) fail(ErrorCode::kInvalidDatum, "field order exceeds 2^40");
  }

  const auto factors = prime_factors(q_ - 1);
  // Candidates: monic x^e + (lower part), lower part enumerated by its encoding.
  bool found = false;
  for (std::uint64_t low = 0; low < q_ && !found; ++low) {
    Poly f(static_cast<std::size_t>(e) + 1, 0);
    std::uint64_t v = low;
    for (int k = 0; k < e; ++k) {
      f[static_cast<std::size_t>(k)] = static_cast<int>(v % static_cast<std::uint64_t>(p));
      v /= static_cast<std::uint64_t>(p);
    }
    f[static_cast<std::size_t>(e)] = 1;
    if (is_primitive(f, p, q_, factors)) {
      modulus_ = f;
      found = true;
    }
  }
  if (!found) fail(ErrorCode::kInternal, "no primitive polynomial found");

  if (q_ <= kTableLimit) {
    tables_ = true;
    exp_.assign(2 * (q_ - 1), 0);
    log_.assign(q_, 0);
    // Generator: x for e >= 2; the root of the linear modulus for e = 1.
    const Elem g = e == 1 ? static_cast<Elem>((p - modulus_[0]) % p) : static_cast<Elem>(p);
    Elem cur = 1;
    for (std::uint64_t k = 0; k < q_ - 1; ++k) {
      exp_[k] = static_cast<std::uint32_t>(cur);
      exp_[k + q_ - 1] = static_cast<std::uint32_t>(cur);
      log_[cur] = static_cast<std::uint32_t>(k);
      cur = mul_poly(cur, g);
    }
  }
}

std::string FiniteField::modulus_string() const {
  std::ostringstream out;
  bool first = true;
  for (int k = e_; k >= 0; --k) {
    const int c = modulus_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    if (!first) out << " + ";
    first = false;
    if (k == 0 || c != 1) out << c;
    if (k >= 1) out << "x";
    if (k >= 2) out << "^" << k;
  }
  return out.str();
}

std::vector<int> FiniteField::digits(Elem a) const {
  std::vector<int> out(static_cast<std::size_t>(e_));
  for (int k = 0; k < e_; ++k) {
    out[static_cast<std::size_t>(k)] = static_cast<int>(a % static_cast<std::uint64_t>(p_));
    a /= static_cast<std::uint64_t>(p_);
  }
  return out;
}

FiniteField::Elem FiniteField::from_digits(const std::vector<int>& digits) const {
  Elem out = 0;
  for (std::size_t k = digits.size(); k-- > 0;) {
    if (k >= static_cast<std::size_t>(e_)) continue;
    out = out * static_cast<std::uint64_t>(p_) +
          static_cast<std::uint64_t>(((digits[k] % p_) + p_) % p_);
  }
  return out;
}

FiniteField::Elem FiniteField::from_int(long long v) const {
  const long long r = ((v % p_) + p_) % p_;
  return static_cast<Elem>(r);
}

FiniteField::Elem FiniteField::add(Elem a, Elem b) const {
  if (p_ == 2) return a ^ b;
  if (e_ == 1) return (a + b) % static_cast<std::uint64_t>(p_);
  Elem out = 0;
  const auto pp = static_cast<std::uint64_t>(p_);
  for (int k = 0; k < e_; ++k) {
    out += ((a % pp + b % pp) % pp) * place_[static_cast<std::size_t>(k)];
    a /= pp;
    b /= pp;
  }
  return out;
}

FiniteField::Elem FiniteField::neg(Elem a) const {
  if (p_ == 2) return a;
  const auto pp = static_cast<std::uint64_t>(p_);
  if (e_ == 1) return (pp - a) % pp;
  Elem out = 0;
  for (int k = 0; k < e_; ++k) {
    out += ((pp - a % pp) % pp) * place_[static_cast<std::size_t>(k)];
    a /= pp;
  }
  return out;
}

FiniteField::Elem FiniteField::sub(Elem a, Elem b) const { return add(a, neg(b)); }

FiniteField::Elem FiniteField::mul_poly(Elem a, Elem b) const {
  if (e_ == 1) return (a * b) % static_cast<std::uint64_t>(p_);
  const Poly pa = digits(a);
  const Poly pb = digits(b);
  return from_digits(mulmod(pa, pb, modulus_, p_));
}

FiniteField::Elem FiniteField::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  if (tables_) return exp_[log_[a] + log_[b]];
  return mul_poly(a, b);
}

FiniteField::Elem FiniteField::pow(Elem a, std::uint64_t n) const {
  if (n == 0) return 1;
  if (a == 0) return 0;
  if (tables_) return exp_[(static_cast<std::uint64_t>(log_[a]) * (n % (q_ - 1))) % (q_ - 1)];
  Elem result = 1;
  while (n > 0) {
    if (n & 1) result = mul(result, a);
    a = mul(a, a);
    n >>= 1;
  }
  return result;
}

FiniteField::Elem FiniteField::inv(Elem a) const {
  if (a == 0) fail(ErrorCode::kInvalidDatum, "inverse of zero");
  if (tables_) return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  return pow(a, q_ - 2);
}

FiniteField::Elem FiniteField::frob(Elem a, int k) const {
  k %= e_;
  if (k < 0) k += e_;
  for (int s = 0; s < k; ++s) a = pow(a, static_cast<std::uint64_t>(p_));
  return a;
}

}  // namespace bt1
