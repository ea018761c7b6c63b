// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <string>

#include "doctest.h"

#include "bt1/certificate.hpp"
#include "bt1/errors.hpp"
#include "bt1/exact_lp.hpp"
#include "bt1/polysys.hpp"
#include "bt1/stabilizer.hpp"
#include "support/oracles.hpp"

using namespace bt1;

namespace {

Bt1Datum five_cycle() { return Bt1Datum(3, 2, Permutation::cycle(5)); }

constexpr const char* kDisplayForm =
    "x[2,1]^4 = a[5,3]*x[4,5] + a[4,3]\n"
    "x[3,1]^2 = a[5,2]*x[4,5] + a[5,3]*x[4,5]*x[2,1]^2 + a[4,2] + a[4,3]*x[2,1]^2\n"
    "x[4,5]^2 = a[5,2]*x[2,1] + a[5,3]*x[3,1] + a[5,1]\n"
    "x[4,1] = a[4,1] + a[4,2]*x[2,1] + a[4,3]*x[3,1]\n";

Rational weighted(const Monomial& m, const std::map<Pair, Rational>& w) {
  Rational s = 0;
  for (const auto& [v, e] : m.x_powers) s += w.at(v) * Rational(e);
  return s;
}

}  // namespace

TEST_SUITE("system generation") {
  TEST_CASE("5-cycle at p = 2 matches the reference equations") {
    const PolySystem sys = gen_system(PairTable(five_cycle()), 2);
    PolySystem golden = parse_system(kDisplayForm, 2);
    canonicalize(golden);
    CHECK(to_text(sys) == to_text(golden));
    CHECK(sys.equations.size() == 4);
    CHECK(sys.find({4, 1})->lhs_degree == 1);
    CHECK(sys.find({2, 1})->lhs_degree == 4);
  }

  TEST_CASE("small systems") {
    CHECK(gen_system(PairTable(Bt1Datum(2, 2, Permutation::identity(4))), 2).equations.empty());
    const PolySystem ss = gen_system(PairTable(Bt1Datum(1, 1, parse_permutation("(1 2)"))), 3);
    CHECK(to_text(ss) == "x[2,1] = + a[2,1]\n");
    CHECK(eliminate_linear(ss).system.equations.empty());
  }

  TEST_CASE("text round trip") {
    for (int p : {2, 3, 5}) {
      for (const auto& datum : oracle::all_data(5)) {
        const PolySystem sys = gen_system(PairTable(datum), p);
        PolySystem back = parse_system(to_text(sys), p);
        canonicalize(back);
        CHECK(to_text(back) == to_text(sys));
      }
    }
  }

  TEST_CASE("parse errors") {
    for (const char* bad : {"x[2,1]^4 = a[5,3]*", "x[2,1 = a[1,2]", "y[1,1] = a[1,2]", "x[2,1]^4 a[1,1]"}) {
      try {
        parse_system(bad, 2);
        FAIL("expected parse error for " << bad);
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::kParse);
      }
    }
  }

  TEST_CASE("variables are the level-one pairs") {
    for (const auto& datum : oracle::all_data(5)) {
      const PairTable t(datum);
      const auto vars = x_variables(t);
      CHECK(vars.size() == t.count(Refined::kMinusOne));
      for (const Pair& v : vars) {
        CHECK(t.eta(v) == 1);
        CHECK((t.is(v, Refined::kZeroZero) || t.is(v, Refined::kPlusOne)));
      }
      const PolySystem sys = gen_system(t, 2);
      CHECK(sys.variables() == vars);
      for (const auto& eq : sys.equations) {
        std::int64_t expected = 1;
        for (int k = 0; k < *t.nu(eq.var); ++k) expected *= 2;
        CHECK(eq.lhs_degree == expected);
        for (const auto& m : eq.rhs) {
          CHECK(m.a_powers.size() == 1);
          for (const auto& [a, e] : m.a_powers) CHECK(t.region(a) == Region::kPlus);
        }
      }
    }
  }

  TEST_CASE("q-expansion agrees with the stabilizer h2 entries up to r = 6") {
    for (int r = 2; r <= 6; ++r) {
      for (const auto& datum : oracle::all_data(r)) {
        const PairTable t(datum);
        const auto param = stabilizer_param(t);
        CHECK(param.h2.terms.size() == t.count(Refined::kZeroZero));
        for (const auto& [pos, term] : param.h2.terms) {
          REQUIRE(t.is(pos, Refined::kZeroZero));
          for (int p : {2, 3}) {
            const QFactor q = q_expansion(t, pos, p);
            CHECK(q.var == datum.pi().apply(term.var));
            std::int64_t e = 1;
            for (int k = 1; k < term.level; ++k) e *= p;
            CHECK(q.exponent == e);
          }
        }
      }
    }
  }

  TEST_CASE("path monomials have weighted degree p^nubar * kappa") {
    for (int r = 3; r <= 6; ++r) {
      for (const auto& datum : oracle::all_data(r)) {
        const PairTable t(datum);
        for (int p : {2, 3}) {
          const PolySystem sys = gen_system(t, p);
          if (sys.equations.empty()) continue;
          const auto w = default_weights(sys);
          std::int64_t top = 1;
          for (const auto& eq : sys.equations) top = std::max(top, eq.lhs_degree);
          std::map<std::vector<int>, Path> by_vertices;
          for (auto& path : enumerate_paths(t)) {
            if (path.selected()) by_vertices.emplace(path.vertices, path);
          }
          for (const auto& term : gen_system_terms(t, p)) {
            if (term.source == RawTerm::Source::kLinear) continue;
            const Path& path = by_vertices.at(term.path);
            CHECK(weighted(term.monomial, w) == Rational(top) * kappa_of_path(path, p));
            const int s = static_cast<int>(term.path.size());
            const int expected_sign = term.source == RawTerm::Source::kGamma1 ? ((s - 2) % 2 ? -1 : 1)
                                                                             : ((s - 3) % 2 ? -1 : 1);
            CHECK(term.sign == expected_sign);
          }
        }
      }
    }
  }

  TEST_CASE("linear elimination") {
    const PolySystem sys = gen_system(PairTable(five_cycle()), 2);
    const auto elim = eliminate_linear(sys);
    CHECK(elim.system.equations.size() == 3);
    CHECK(elim.eliminated == std::vector<Pair>{{4, 1}});
    CHECK(elim.cyclic_linear.empty());
    for (const auto& eq : elim.system.equations) CHECK(eq.lhs_degree > 1);

    // No degree-one equations: unchanged.
    const PolySystem fixed = elim.system;
    CHECK(to_text(eliminate_linear(fixed).system) == to_text(fixed));

    // Substitution into a Frobenius power.
    const PolySystem toy = parse_system("x[1,2]^2 = a[1,1]*x[1,3]\nx[1,3] = a[2,2] + a[3,3]*x[1,2]\n", 3);
    const auto e2 = eliminate_linear(toy);
    CHECK(to_text(e2.system) == "x[1,2]^2 = + a[1,1]*a[2,2] + a[1,1]*a[3,3]*x[1,2]\n");

    const PolySystem cyc = parse_system("x[1,2] = a[1,1] + a[2,2]*x[1,2]\n", 3);
    const auto e3 = eliminate_linear(cyc);
    CHECK(e3.cyclic_linear == std::vector<Pair>{{1, 2}});
    CHECK(e3.system.equations.size() == 1);
  }
}

TEST_SUITE("certificates") {
  TEST_CASE("exact LP") {
    LpProblem lp;
    lp.num_vars = 2;
    lp.rows = {{1, 1}, {1, -1}};
    lp.rhs = {3, 1};
    const auto x = find_feasible_point(lp);
    REQUIRE(x.has_value());
    CHECK((*x)[0] + (*x)[1] >= 3);
    CHECK((*x)[0] - (*x)[1] >= 1);
    LpProblem bad;
    bad.num_vars = 1;
    bad.rows = {{1}, {-1}};
    bad.rhs = {2, -1};
    CHECK_FALSE(find_feasible_point(bad).has_value());
  }

  TEST_CASE("5-cycle certificates") {
    const PairTable t(five_cycle());
    const auto c3 = default_certificate(gen_system(t, 3), t, 3);
    CHECK(c3.satisfied);
    CHECK(c3.cover_exponent == 4);
    CHECK(c3.cover_degree == 81);
    const auto c2 = default_certificate(gen_system(t, 2), t, 2);
    CHECK_FALSE(c2.satisfied);
    REQUIRE_FALSE(c2.violations.empty());
    for (const auto& v : c2.violations) CHECK(v.weighted_degree >= v.bound);

    const auto elim = eliminate_linear(gen_system(t, 2));
    const auto w = weight_search(elim.system);
    REQUIRE(w.has_value());
    CHECK(check_certificate(elim.system, *w).satisfied);
    CHECK(weight_search(gen_system(t, 3)).has_value());

    const auto empty = weight_search(PolySystem{});
    REQUIRE(empty.has_value());
    CHECK(empty->empty());
  }

  TEST_CASE("checker rejects bad weights") {
    const PolySystem sys = parse_system("x[1,2]^2 = a[1,1]*x[1,3]\nx[1,3]^2 = a[2,2]*x[1,2]\n", 2);
    CHECK(check_certificate(sys, {{{1, 2}, 1}, {{1, 3}, 1}}).satisfied);
    CHECK_FALSE(check_certificate(sys, {{{1, 2}, 1}, {{1, 3}, 2}}).satisfied);
    const PolySystem loop = parse_system("x[1,2]^2 = a[1,1]*x[1,2]^2\n", 2);
    CHECK_FALSE(weight_search(loop).has_value());
  }

  TEST_CASE("finiteness reports") {
    const auto r5 = finiteness_report(five_cycle(), 5);
    CHECK(r5.verdict == Verdict::kCertifiedDefault);
    CHECK(r5.cover_degree == 625);
    CHECK(r5.degree_asserted);
    const auto r2 = finiteness_report(five_cycle(), 2);
    CHECK(r2.verdict == Verdict::kCertifiedSearched);
    CHECK_FALSE(r2.degree_asserted);
    const auto id = finiteness_report(Bt1Datum(2, 2, Permutation::identity(4)), 2);
    CHECK(id.verdict == Verdict::kCertifiedDefault);
    CHECK(id.cover_degree == 1);
  }

  TEST_CASE("default certificate whenever kappa < 1, up to r = 5") {
    for (int r = 2; r <= 5; ++r) {
      for (const auto& datum : oracle::all_data(r)) {
        const PairTable t(datum);
        for (int p : {2, 3}) {
          const PolySystem sys = gen_system(t, p);
          const auto cert = default_certificate(sys, t, p);
          CHECK(cert.cover_exponent == static_cast<int>(t.count(Refined::kZeroZero)));
          if (kappa_of_perm(t, p).kappa_pi < 1) CHECK(cert.satisfied);
          if (const auto w = weight_search(sys)) CHECK(check_certificate(sys, *w).satisfied);
        }
      }
    }
  }

  TEST_CASE("dimension ceiling") {
    std::string text;
    for (int k = 1; k <= 5; ++k) text += "x[1," + std::to_string(k) + "]^2 = a[1,1]\n";
    const PolySystem sys = parse_system(text, 2);
    try {
      weight_search(sys, 3);
      FAIL("expected DimensionCeiling");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kDimensionCeiling);
    }
  }
}

TEST_SUITE("micro oracle") {
  TEST_CASE("certified random systems have the expected number of points") {
    CounterRng rng(29, 0);
    int accepted = 0;
    for (int attempt = 0; attempt < 200 && accepted < 4; ++attempt) {
      const int p = attempt % 2 == 0 ? 2 : 3;
      const auto micro = oracle::random_micro_system(p, 1, 1 + static_cast<int>(rng.below(2)), rng);
      if (!weight_search(micro.system)) continue;
      const auto count = oracle::count_points(micro);
      if (!count.etale) continue;
      CHECK(count.geometric_points == static_cast<std::uint64_t>(micro.degree_product));
      ++accepted;
    }
    CHECK(accepted == 4);
  }
}
