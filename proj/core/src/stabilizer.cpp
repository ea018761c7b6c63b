// SPDX-License-Identifier: Apache-2.0
#include "bt1/stabilizer.hpp"

#include <set>

#include "bt1/errors.hpp"
#include "bt1/rng.hpp"

namespace bt1 {

FqMatrix FormalMatrix::instantiate(const FieldPtr& field,
                                   const std::map<Pair, FiniteField::Elem>& y) const {
  FqMatrix m = FqMatrix::identity(field, r);
  for (const auto& [pos, term] : terms) {
    const auto it = y.find(term.var);
    if (it == y.end()) fail(ErrorCode::kInternal, "no value for y" + to_string(term.var));
    m.at(pos.i - 1, pos.j - 1) = field->add(m.at(pos.i - 1, pos.j - 1), field->frob(it->second, term.level));
  }
  return m;
}

StabilizerParam stabilizer_param(const PairTable& table) {
  StabilizerParam out;
  out.variables = table.pairs(Refined::kMinusOne);
  out.h12.r = out.h2.r = out.h23.r = table.r();
  const Permutation& pi = table.datum().pi();
  for (const Pair& var : out.variables) {
    const int nu = *table.nu(var);
    for (int l = 0; l <= nu; ++l) {
      const Pair pos = pi.apply(var, l);
      const FormalTerm term{var, l};
      if (l >= 1) out.h12.terms.emplace(pos, term);
      if (l >= 1 && l <= nu - 1) out.h2.terms.emplace(pos, term);
      if (l <= nu - 1) out.h23.terms.emplace(pos, term);
    }
  }
  return out;
}

namespace {

std::uint64_t checked_power(std::uint64_t q, std::size_t k, std::uint64_t cap) {
  std::uint64_t out = 1;
  for (std::size_t s = 0; s < k; ++s) {
    if (out > cap / q) return cap + 1;
    out *= q;
  }
  return out;
}

std::vector<FiniteField::Elem> flatten(const FqMatrix& a, const FqMatrix& b, const FqMatrix& c) {
  std::vector<FiniteField::Elem> out;
  for (const FqMatrix* m : {&a, &b, &c}) {
    for (int i = 0; i < m->rows(); ++i) {
      for (int j = 0; j < m->cols(); ++j) out.push_back(m->at(i, j));
    }
  }
  return out;
}

}  // namespace

StabilizerReport verify_stabilizer(const PairTable& table, int p, int e, int trials, std::uint64_t seed) {
  const FieldPtr field = FiniteField::get(p, e);
  const StabilizerParam param = stabilizer_param(table);
  const Permutation& pi = table.datum().pi();
  const int r = table.r();
  StabilizerReport report;
  report.trials = trials;
  report.seed = seed;
  report.p = p;
  report.e = e;

  constexpr std::uint64_t kExhaustiveCap = std::uint64_t{1} << 16;
  const std::size_t nvars = param.variables.size();
  report.expected_triples = checked_power(field->q(), nvars, ~std::uint64_t{0} - 1);
  report.exhaustive = checked_power(field->q(), nvars, kExhaustiveCap) <= kExhaustiveCap;

  auto instantiate = [&](const std::map<Pair, FiniteField::Elem>& y) {
    return flatten(param.h12.instantiate(field, y), param.h2.instantiate(field, y),
                   param.h23.instantiate(field, y));
  };
  auto record_failure = [&](const std::string& what) {
    if (report.ok) report.counterexample = what;
    report.ok = false;
  };

  CounterRng rng(seed);
  std::set<std::vector<FiniteField::Elem>> sampled_assignments;
  std::set<std::vector<FiniteField::Elem>> sampled_triples;
  for (int t = 0; t < trials; ++t) {
    std::map<Pair, FiniteField::Elem> y;
    std::vector<FiniteField::Elem> assignment;
    for (const Pair& var : param.variables) {
      y[var] = field->random(rng);
      assignment.push_back(y[var]);
    }
    const FqMatrix h12 = param.h12.instantiate(field, y);
    const FqMatrix h2 = param.h2.instantiate(field, y);
    const FqMatrix h23 = param.h23.instantiate(field, y);

    // h2 = 1 + n with n nilpotent: n^r = 0 and the alternating series inverts h2.
    const FqMatrix id = FqMatrix::identity(field, r);
    const FqMatrix n = h2 - id;
    FqMatrix power = id;
    FqMatrix series(field, r, r);
    const FiniteField::Elem minus_one = field->neg(1);
    FqMatrix minus_n = n;
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < r; ++j) minus_n.at(i, j) = field->mul(minus_one, n.at(i, j));
    }
    for (int k = 0; k < r; ++k) {
      series = series + power;
      power = power * minus_n;
    }
    if (!power.is_zero()) record_failure("h2 - 1 is not nilpotent (trial " + std::to_string(t) + ")");
    if (!(h2 * series == id) || !(series * h2 == id)) {
      record_failure("geometric series does not invert h2 (trial " + std::to_string(t) + ")");
    }

    for (int i = 1; i <= r; ++i) {
      for (int j = 1; j <= r; ++j) {
        const FiniteField::Elem lhs = h12.at(pi(i) - 1, pi(j) - 1);
        const FiniteField::Elem rhs = field->frob(h23.at(i - 1, j - 1), 1);
        if (lhs != rhs) {
          record_failure("twist identity fails at " + to_string(Pair{i, j}) + " (trial " +
                         std::to_string(t) + ")");
        }
      }
    }
    if (!report.exhaustive) {
      sampled_assignments.insert(assignment);
      sampled_triples.insert(flatten(h12, h2, h23));
    }
  }

  if (report.exhaustive) {
    std::set<std::vector<FiniteField::Elem>> triples;
    std::vector<FiniteField::Elem> digits(nvars, 0);
    for (std::uint64_t k = 0; k < report.expected_triples; ++k) {
      std::map<Pair, FiniteField::Elem> y;
      for (std::size_t v = 0; v < nvars; ++v) y[param.variables[v]] = digits[v];
      triples.insert(instantiate(y));
      for (std::size_t v = 0; v < nvars && ++digits[v] == field->q(); ++v) digits[v] = 0;
    }
    report.distinct_triples = triples.size();
    if (report.distinct_triples != report.expected_triples) {
      record_failure("instantiation is not injective: " + std::to_string(report.distinct_triples) +
                     " distinct triples, expected " + std::to_string(report.expected_triples));
    }
  } else {
    report.distinct_triples = sampled_triples.size();
    if (sampled_triples.size() != sampled_assignments.size()) {
      record_failure("two sampled assignments give the same triple");
    }
  }
  return report;
}

}  // namespace bt1
