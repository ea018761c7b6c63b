// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>
#include <set>

#include "doctest.h"

#include "bt1/errors.hpp"
#include "bt1/kappa.hpp"
#include "bt1/kraft.hpp"
#include "support/oracles.hpp"

using namespace bt1;

namespace {

Bt1Datum cycle_datum(int c, int d) { return Bt1Datum(c, d, Permutation::cycle(c + d)); }

std::set<std::vector<int>> selected(const std::vector<Path>& paths, bool gamma1) {
  std::set<std::vector<int>> out;
  for (const auto& p : paths) {
    if (gamma1 ? p.in_gamma1 : p.in_delta1) out.insert(p.vertices);
  }
  return out;
}

// Reference enumeration straight from the membership conditions.
struct RefPath {
  std::vector<int> v;
  PathKind kind;
};

void extend(const PairTable& t, std::vector<int>& prefix, std::vector<RefPath>& out) {
  const int r = t.r();
  const int last = prefix.back();
  for (int k = 1; k <= r; ++k) {
    if (t.is({last, k}, Refined::kPlusTwo)) {
      auto g = prefix;
      g.push_back(k);
      out.push_back({g, PathKind::kGamma});
      // Delta paths: Gamma path followed by one ZeroZero step.
      for (int m = 1; m <= r; ++m) {
        if (t.is({k, m}, Refined::kZeroZero)) {
          auto dpath = g;
          dpath.push_back(m);
          out.push_back({dpath, PathKind::kDelta});
        }
      }
    }
    if (t.is({last, k}, Refined::kZeroZero)) {
      prefix.push_back(k);
      extend(t, prefix, out);
      prefix.pop_back();
    }
  }
}

std::vector<RefPath> reference_paths(const PairTable& t) {
  std::vector<RefPath> out;
  for (int i = 1; i <= t.r(); ++i) {
    std::vector<int> prefix{i};
    extend(t, prefix, out);
  }
  return out;
}

}  // namespace

TEST_SUITE("paths") {
  TEST_CASE("5-cycle selected families") {
    const PairTable t(cycle_datum(3, 2));
    const auto paths = enumerate_paths(t);
    CHECK(selected(paths, true) == std::set<std::vector<int>>{{4, 5, 2}, {4, 5, 3}});
    CHECK(selected(paths, false) == std::set<std::vector<int>>{{4, 5, 3, 2}, {5, 2, 1}, {5, 3, 1}});
  }

  TEST_CASE("identity of height 2 has no selected paths") {
    const PairTable t(Bt1Datum(1, 1, Permutation::identity(2)));
    const auto paths = enumerate_paths(t);
    CHECK_FALSE(paths.empty());
    for (const auto& p : paths) {
      CHECK(p.vertices.size() == 2);
      CHECK_FALSE(p.selected());
    }
  }

  TEST_CASE("path ceiling") {
    PathLimits limits;
    limits.max_paths = 3;
    try {
      enumerate_paths(PairTable(cycle_datum(4, 4)), limits);
      FAIL("expected PathExplosion");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kPathExplosion);
    }
  }

  TEST_CASE("matches the reference enumeration on all of S_5 and S_6") {
    for (int r = 5; r <= 6; ++r) {
      for (const auto& datum : oracle::all_data(r)) {
        const PairTable t(datum);
        const auto paths = enumerate_paths(t);
        const auto ref = reference_paths(t);
        REQUIRE(paths.size() == ref.size());
        std::set<std::pair<std::vector<int>, int>> a, b;
        for (const auto& p : paths) a.insert({p.vertices, static_cast<int>(p.kind)});
        for (const auto& p : ref) b.insert({p.v, static_cast<int>(p.kind)});
        CHECK(a == b);
        for (const auto& p : paths) {
          const int s = static_cast<int>(p.vertices.size());
          const Pair ends{p.vertices.front(), p.vertices.back()};
          const Pair second{p.vertices[1], p.vertices.back()};
          const bool cond = s >= 2 && t.is(ends, Refined::kPlusOne) && !t.is(second, Refined::kPlusOne);
          CHECK(p.in_gamma1 == (cond && p.kind == PathKind::kGamma && s >= 3));
          CHECK(p.in_delta1 == (cond && p.kind == PathKind::kDelta));
          int total = 0;
          for (const auto& [order, n] : p.nt) total += n;
          CHECK(total == p.zero_zero_steps());
        }
      }
    }
  }
}

TEST_SUITE("kappa") {
  TEST_CASE("path values") {
    const PairTable t(cycle_datum(3, 2));
    for (const auto& p : enumerate_paths(t)) {
      if (p.vertices == std::vector<int>{4, 5, 2}) CHECK(kappa_of_path(p, 2) == Rational(1, 2));
      if (p.vertices == std::vector<int>{4, 5, 3, 2}) {
        CHECK(kappa_of_path(p, 2) == Rational(1));
        CHECK(kappa_of_path(p, 3) == Rational(2, 3));
      }
    }
  }

  TEST_CASE("permutation values") {
    CHECK(kappa_of_perm(cycle_datum(3, 2), 2).kappa_pi == Rational(1));
    CHECK(kappa_of_perm(cycle_datum(3, 2), 3).kappa_pi == Rational(2, 3));
    CHECK(kappa_of_perm(cycle_datum(4, 4), 3).kappa_pi == Rational(22, 27));
    for (int c = 1; c <= 3; ++c) {
      for (int d = 1; d <= 3; ++d) {
        const auto rep = kappa_of_perm(Bt1Datum(c, d, Permutation::identity(c + d)), 2);
        CHECK(rep.kappa_pi == 0);
        CHECK_FALSE(rep.witness.has_value());
      }
    }
  }

  TEST_CASE("class values and condition (C)") {
    CHECK(kappa_of_class(cycle_datum(3, 2), 2) == Rational(1));
    CHECK(kappa_of_class(Bt1Datum(1, 1, parse_permutation("(1 2)")), 2) == 0);
    CHECK(kappa_of_class(Bt1Datum(2, 2, Permutation::identity(4)), 3) == 0);
    CHECK(condition_c(Bt1Datum(2, 2, Permutation::identity(4)), 2).condition_c == true);
    CHECK(condition_c(cycle_datum(3, 2), 3).condition_c == true);
    CHECK(condition_c(cycle_datum(2, 3), 3).condition_c == true);
    const auto report = condition_c(cycle_datum(3, 2), 2);
    REQUIRE(report.kappa_class.has_value());
    REQUIRE(report.dual_kappa_class.has_value());
    CHECK(*report.condition_c == (*report.kappa_class < 1 || *report.dual_kappa_class < 1));
  }

  TEST_CASE("class representatives") {
    const auto reps = class_representatives(Bt1Datum(1, 1, parse_permutation("(1 2)")));
    REQUIRE(reps.size() == 1);
    CHECK(reps.front() == parse_permutation("(1 2)"));
    CHECK(class_representatives(Bt1Datum(2, 1, Permutation::identity(3))) ==
          class_representatives(Bt1Datum(2, 1, parse_permutation("(1 2)", 3))));
    const auto eight = class_representatives(cycle_datum(4, 4));
    CHECK(std::find(eight.begin(), eight.end(), Permutation::cycle(8)) != eight.end());
    for (const auto& pi : eight) CHECK(pi.cycles().size() == 1);
    try {
      class_representatives(Bt1Datum(5, 5, Permutation::cycle(10)), 8);
      FAIL("expected RTooLarge");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kRTooLarge);
    }
  }

  TEST_CASE("r-cycle closed form for the maximum") {
    for (int c = 3; c <= 4; ++c) {
      for (int d = 2; d <= 4; ++d) {
        for (int p : {2, 3, 5}) {
          Rational expected(2, p);
          for (int t = 2; t <= d - 1; ++t) expected += Rational(1, static_cast<long>(std::pow(p, t)));
          CHECK(kappa_of_perm(cycle_datum(c, d), p).kappa_pi == expected);
        }
      }
    }
  }

  TEST_CASE("scalar action period") {
    CHECK(scalar_action_period(Bt1Datum(1, 1, parse_permutation("(1 2)"))) == 2);
    CHECK(scalar_action_period(Bt1Datum(2, 2, Permutation::identity(4))) == 1);
    CHECK(scalar_action_period(cycle_datum(4, 4)) == 1);
    for (const auto& datum : oracle::all_data(5)) {
      CHECK(scalar_action_period(datum) == oracle::brute_scalar_period(datum));
    }
  }

  TEST_CASE("bounds on every datum up to r = 6") {
    for (int r = 2; r <= 6; ++r) {
      for (const auto& datum : oracle::all_data(r)) {
        const PairTable t(datum);
        const auto paths = enumerate_paths(t);
        const int a = scalar_action_period(datum);
        Rational all_max = 0;
        for (const auto& path : paths) {
          int below = 0;
          for (const auto& [order, n] : path.nt) {
            if (path.kind == PathKind::kGamma) {
              CHECK(n <= 1 + below);
              CHECK(n <= (1 << (order - 1)));
            }
            below += n;
            if (a >= 2 && path.kind == PathKind::kGamma) CHECK(order % a == 0);
          }
          all_max = std::max(all_max, kappa_of_path(path, 2));
          if (path.kind == PathKind::kGamma) {
            for (int p : {3, 5}) CHECK(kappa_of_path(path, p) < 1);
            if (a >= 2) {
              for (int p : {2, 3}) {
                CHECK(kappa_of_path(path, p) * (static_cast<long>(std::pow(p, a)) - 2) < 1);
              }
            }
          }
        }
        const auto k2 = kappa_of_perm(t, 2);
        CHECK(k2.kappa_pi <= all_max);
        CHECK((k2.kappa_pi == 0) == !k2.witness.has_value());
        if (t.count(Refined::kPlusTwo) == 0) CHECK(k2.kappa_pi == 0);
        CHECK(kappa_of_perm(t, 3).kappa_pi < Rational(4, 3));
        CHECK(kappa_of_perm(t, 5).kappa_pi < 1);
        CHECK(kappa_of_perm(t, 7).kappa_pi < 1);
      }
    }
  }

  TEST_CASE("class function on every class up to r = 6") {
    for (int r = 2; r <= 6; ++r) {
      for (int c = 1; c < r; ++c) {
        const ClassIndex index(c, r - c, r);
        for (const auto& [inv, members] : index.classes()) {
          Rational least = -1;
          for (const auto& pi : members) {
            const Rational k = kappa_of_perm(Bt1Datum(c, r - c, pi), 2).kappa_pi;
            if (least < 0 || k < least) least = k;
          }
          CHECK(kappa_of_class(Bt1Datum(c, r - c, members.front()), 2) == least);
          CHECK(kappa_of_class(Bt1Datum(c, r - c, members.back()), 2) == least);
        }
      }
    }
  }
}
