// SPDX-License-Identifier: Apache-2.0
#include "bt1/polysys.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "bt1/errors.hpp"

namespace bt1 {
namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) fail(ErrorCode::kInternal, "exponent overflow");
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) fail(ErrorCode::kInternal, "exponent overflow");
  return out;
}

std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t out = 1;
  for (int k = 0; k < exp; ++k) out = checked_mul(out, base);
  return out;
}

int mod_p(long long v, int p) { return static_cast<int>(((v % p) + p) % p); }

using Poly = std::vector<Monomial>;

void merge_like_terms(Poly& poly, int p) {
  std::sort(poly.begin(), poly.end(), support_less);
  Poly out;
  for (auto& m : poly) {
    if (!out.empty() && same_support(out.back(), m)) {
      out.back().coeff = mod_p(out.back().coeff + m.coeff, p);
    } else {
      out.push_back(std::move(m));
    }
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](const Monomial& m) { return m.coeff == 0; }),
            out.end());
  poly = std::move(out);
}

Monomial multiply(const Monomial& m, const Monomial& n, int p) {
  Monomial out = m;
  out.coeff = mod_p(static_cast<long long>(m.coeff) * n.coeff, p);
  for (const auto& [pair, e] : n.a_powers) out.a_powers[pair] = checked_add(out.a_powers[pair], e);
  for (const auto& [pair, e] : n.x_powers) out.x_powers[pair] = checked_add(out.x_powers[pair], e);
  return out;
}

Poly multiply(const Poly& f, const Poly& g, int p) {
  Poly out;
  for (const auto& m : f) {
    for (const auto& n : g) out.push_back(multiply(m, n, p));
  }
  merge_like_terms(out, p);
  return out;
}

// f^k in characteristic p: split k = p^l * m, apply Frobenius termwise, then
// multiply out the remaining m-th power.
Poly power(const Poly& f, std::int64_t k, int p) {
  std::int64_t frob = 1;
  while (k % p == 0) {
    k /= p;
    frob = checked_mul(frob, p);
  }
  Poly base = f;
  for (auto& m : base) {
    for (auto& [pair, e] : m.a_powers) e = checked_mul(e, frob);
    for (auto& [pair, e] : m.x_powers) e = checked_mul(e, frob);
  }
  merge_like_terms(base, p);
  Poly out{Monomial{}};
  for (std::int64_t s = 0; s < k; ++s) out = multiply(out, base, p);
  return out;
}

bool mentions(const Poly& poly, Pair var) {
  return std::any_of(poly.begin(), poly.end(),
                     [&](const Monomial& m) { return m.x_powers.count(var) != 0; });
}

Poly substitute(const Poly& poly, Pair var, const Poly& value, int p) {
  Poly out;
  for (const auto& m : poly) {
    auto it = m.x_powers.find(var);
    if (it == m.x_powers.end()) {
      out.push_back(m);
      continue;
    }
    Monomial rest = m;
    rest.x_powers.erase(var);
    for (auto& term : multiply(Poly{rest}, power(value, it->second, p), p)) out.push_back(std::move(term));
  }
  merge_like_terms(out, p);
  return out;
}

}  // namespace

bool support_less(const Monomial& m, const Monomial& n) {
  if (m.a_powers != n.a_powers) return m.a_powers < n.a_powers;
  return m.x_powers < n.x_powers;
}

const Equation* PolySystem::find(Pair var) const {
  for (const auto& eq : equations) {
    if (eq.var == var) return &eq;
  }
  return nullptr;
}

std::vector<Pair> PolySystem::variables() const {
  std::vector<Pair> out;
  for (const auto& eq : equations) out.push_back(eq.var);
  return out;
}

void canonicalize(PolySystem& system) {
  std::sort(system.equations.begin(), system.equations.end(),
            [](const Equation& a, const Equation& b) { return a.var < b.var; });
  for (auto& eq : system.equations) {
    for (auto& m : eq.rhs) m.coeff = mod_p(m.coeff, system.p);
    merge_like_terms(eq.rhs, system.p);
  }
}

QFactor q_expansion(const PairTable& table, Pair pair, int p) {
  if (!table.is(pair, Refined::kZeroZero)) {
    fail(ErrorCode::kInvalidDatum, to_string(pair) + " is not a ZeroZero pair");
  }
  const Pair origin = *table.origin(pair);
  return {table.datum().pi().apply(origin, 1), ipow(p, *table.eta(pair) - 1)};
}

std::vector<Pair> x_variables(const PairTable& table) {
  std::vector<Pair> out;
  for (auto kind : {Refined::kZeroZero, Refined::kPlusOne}) {
    for (const Pair& pair : table.pairs(kind)) {
      if (table.eta(pair) == 1) out.push_back(pair);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<RawTerm> gen_system_terms(const PairTable& table, int p, PathLimits limits) {
  const Permutation& pi = table.datum().pi();
  std::map<std::pair<int, int>, std::vector<Path>> selected;
  for (auto& path : enumerate_paths(table, limits)) {
    if (!path.selected()) continue;
    selected[{path.vertices.front(), path.vertices.back()}].push_back(std::move(path));
  }
  auto add_q = [&](Monomial& m, Pair step) {
    const QFactor q = q_expansion(table, step, p);
    m.x_powers[q.var] = checked_add(m.x_powers[q.var], q.exponent);
  };

  std::vector<RawTerm> out;
  for (const Pair& var : x_variables(table)) {
    const Pair end = pi.apply(var, *table.nu(var));

    RawTerm constant;
    constant.equation = var;
    constant.monomial.a_powers[end] = 1;
    out.push_back(constant);
    for (int k = 1; k <= table.r(); ++k) {
      if (!table.is({end.i, k}, Refined::kPlusOne) || !table.is({k, end.j}, Refined::kZeroZero)) continue;
      RawTerm term;
      term.equation = var;
      term.monomial.a_powers[{end.i, k}] = 1;
      add_q(term.monomial, {k, end.j});
      out.push_back(std::move(term));
    }

    const auto it = selected.find({end.i, end.j});
    if (it == selected.end()) continue;
    for (const Path& path : it->second) {
      const auto& v = path.vertices;
      const int s = static_cast<int>(v.size());
      RawTerm term;
      term.equation = var;
      term.path = v;
      const auto at = [&](int l) { return v[static_cast<std::size_t>(l)]; };
      if (path.in_gamma1) {
        term.source = RawTerm::Source::kGamma1;
        term.sign = (s - 2) % 2 == 0 ? 1 : -1;
        term.monomial.a_powers[{at(s - 2), at(s - 1)}] = 1;
        for (int l = 0; l + 2 < s; ++l) add_q(term.monomial, {at(l), at(l + 1)});
      } else {
        term.source = RawTerm::Source::kDelta1;
        term.sign = (s - 3) % 2 == 0 ? 1 : -1;
        term.monomial.a_powers[{at(s - 3), at(s - 2)}] = 1;
        for (int l = 0; l + 3 < s; ++l) add_q(term.monomial, {at(l), at(l + 1)});
        add_q(term.monomial, {at(s - 2), at(s - 1)});
      }
      out.push_back(std::move(term));
    }
  }
  return out;
}

PolySystem gen_system(const PairTable& table, int p, PathLimits limits) {
  PolySystem system;
  system.p = p;
  std::map<Pair, std::size_t> slot;
  for (const Pair& var : x_variables(table)) {
    Equation eq;
    eq.var = var;
    eq.nu = *table.nu(var);
    eq.lhs_degree = ipow(p, *eq.nu);
    slot[var] = system.equations.size();
    system.equations.push_back(std::move(eq));
  }
  for (auto& term : gen_system_terms(table, p, limits)) {
    term.monomial.coeff = mod_p(term.sign, p);
    system.equations[slot.at(term.equation)].rhs.push_back(std::move(term.monomial));
  }
  canonicalize(system);
  return system;
}

EliminationReport eliminate_linear(const PolySystem& input) {
  EliminationReport report;
  report.system = input;
  canonicalize(report.system);
  auto& eqs = report.system.equations;
  const int p = report.system.p;
  std::set<Pair> cyclic;
  while (true) {
    auto target = eqs.end();
    for (auto it = eqs.begin(); it != eqs.end(); ++it) {
      if (it->lhs_degree != 1 || cyclic.count(it->var)) continue;
      if (mentions(it->rhs, it->var)) {
        cyclic.insert(it->var);
        continue;
      }
      target = it;
      break;
    }
    if (target == eqs.end()) break;
    const Pair var = target->var;
    const Poly value = target->rhs;
    eqs.erase(target);
    for (auto& eq : eqs) eq.rhs = substitute(eq.rhs, var, value, p);
    report.eliminated.push_back(var);
  }
  report.cyclic_linear.assign(cyclic.begin(), cyclic.end());
  return report;
}

std::string to_text(const Monomial& m, int p) {
  std::ostringstream out;
  if (p == 2 || m.coeff == 1) {
    out << "+ ";
  } else if (m.coeff == p - 1) {
    out << "- ";
  } else {
    out << "+ " << m.coeff << "*";
  }
  bool first = true;
  auto factor = [&](char name, Pair pair, std::int64_t e) {
    out << (first ? "" : "*") << name << '[' << pair.i << ',' << pair.j << ']';
    if (e != 1) out << '^' << e;
    first = false;
  };
  for (const auto& [pair, e] : m.a_powers) factor('a', pair, e);
  for (const auto& [pair, e] : m.x_powers) factor('x', pair, e);
  if (first) out << '1';
  return out.str();
}

std::string to_text(const PolySystem& system) {
  std::ostringstream out;
  for (const auto& eq : system.equations) {
    out << "x[" << eq.var.i << ',' << eq.var.j << ']';
    if (eq.lhs_degree != 1) out << '^' << eq.lhs_degree;
    out << " =";
    if (eq.rhs.empty()) out << " 0";
    for (const auto& m : eq.rhs) out << ' ' << to_text(m, system.p);
    out << '\n';
  }
  return out.str();
}

namespace {

class TextParser {
 public:
  TextParser(std::string_view text, int p) : text_(text), p_(p) {}

  Equation equation() {
    Equation eq;
    expect('x');
    eq.var = pair();
    eq.lhs_degree = exponent();
    expect('=');
    skip_space();
    if (peek() == '0') {
      ++pos_;
      finish();
      return eq;
    }
    while (!at_end()) eq.rhs.push_back(monomial(eq.rhs.empty()));
    return eq;
  }

 private:
  // The first term of a right-hand side may omit its sign.
  Monomial monomial(bool first) {
    Monomial m;
    skip_space();
    char sign = '+';
    if (peek() == '+' || peek() == '-') {
      sign = get();
    } else if (!first) {
      error("expected '+' or '-'");
    }
    skip_space();
    long long coeff = 1;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = number();
      if (peek() == '*') {
        ++pos_;
      } else {
        m.coeff = mod_p(sign == '-' ? -coeff : coeff, p_);
        return m;
      }
    }
    while (true) {
      skip_space();
      const char name = get();
      if (name != 'a' && name != 'x') error("expected a[..] or x[..]");
      const Pair pr = pair();
      const std::int64_t e = exponent();
      auto& slot = name == 'a' ? m.a_powers[pr] : m.x_powers[pr];
      slot = checked_add(slot, e);
      skip_space();
      if (peek() != '*') break;
      ++pos_;
    }
    m.coeff = mod_p(sign == '-' ? -coeff : coeff, p_);
    return m;
  }

  Pair pair() {
    expect('[');
    Pair out;
    out.i = static_cast<int>(number());
    expect(',');
    out.j = static_cast<int>(number());
    expect(']');
    return out;
  }

  std::int64_t exponent() {
    skip_space();
    if (peek() != '^') return 1;
    ++pos_;
    return number();
  }

  long long number() {
    skip_space();
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_ || pos_ - start > 15) error("expected a number");
    return std::stoll(std::string(text_.substr(start, pos_ - start)));
  }

  void expect(char c) {
    skip_space();
    if (get() != c) error(std::string("expected '") + c + "'");
  }
  void finish() {
    if (!at_end()) error("trailing characters");
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char get() { return pos_ < text_.size() ? text_[pos_++] : '\0'; }
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorCode::kParse, what + " at column " + std::to_string(pos_ + 1) + " of '" +
                                std::string(text_) + "'");
  }

  std::string_view text_;
  int p_;
  std::size_t pos_ = 0;
};

}  // namespace

PolySystem parse_system(std::string_view text, int p) {
  PolySystem system;
  system.p = p;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(start, end - start);
    if (line.find_first_not_of(" \t\r") != std::string_view::npos) {
      system.equations.push_back(TextParser(line, p).equation());
    }
    start = end + 1;
  }
  canonicalize(system);
  return system;
}

}  // namespace bt1
