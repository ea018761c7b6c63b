// SPDX-License-Identifier: Apache-2.0
#include <algorithm>

#include "doctest.h"

#include "bt1/errors.hpp"
#include "bt1/kraft.hpp"
#include "bt1/pair_table.hpp"
#include "bt1/semilinear.hpp"
#include "support/oracles.hpp"

using namespace bt1;

namespace {

KraftInvariant inv_of(int c, int d, const char* pi) {
  return kraft_invariant(Bt1Datum(c, d, parse_permutation(pi, c + d)));
}

std::vector<std::string> W(std::initializer_list<const char*> w) { return {w.begin(), w.end()}; }

}  // namespace

TEST_SUITE("words") {
  TEST_CASE("rotations and roots") {
    CHECK(least_rotation("VFF") == "FFV");
    CHECK(least_rotation("FVFV") == "FVFV");
    CHECK(primitive_root("FVFV") == "FV");
    CHECK(primitive_root("FFV") == "FFV");
    CHECK(primitive_root("FFFF") == "F");
  }

  TEST_CASE("canonical invariants") {
    CHECK(inv_of(1, 1, "(1 2)").words() == W({"FV"}));
    CHECK(inv_of(2, 1, "(1 2)") == inv_of(2, 1, "()"));
    CHECK(inv_of(2, 1, "()").words() == W({"F", "F", "V"}));
    CHECK(inv_of(2, 2, "(1 3)(2 4)").words() == W({"FV", "FV"}));
    const KraftInvariant k = inv_of(3, 2, "(1 2 3 4 5)");
    CHECK(k.c() == 3);
    CHECK(k.d() == 2);
    CHECK(KraftInvariant::parse(k.key()) == k);
    CHECK(KraftInvariant::from_words(W({"VF", "FVFV", "FF"})).words() == W({"F", "F", "FV", "FV", "FV"}));
  }

  TEST_CASE("parse errors") {
    CHECK_THROWS_AS(KraftInvariant::parse("FX"), Error);
  }

  TEST_CASE("duality") {
    CHECK(dual(inv_of(1, 1, "(1 2)")).words() == W({"FV"}));
    CHECK(dual(inv_of(2, 1, "()")).words() == W({"F", "V", "V"}));
    const KraftInvariant k = KraftInvariant::from_words(W({"FFV", "FVV"}));
    CHECK(dual(k).words() == W({"FFV", "FVV"}));
    const KraftInvariant k2 = KraftInvariant::from_words(W({"FFVFV"}));
    CHECK(dual(k2).c() == k2.d());
    for (int r = 2; r <= 8; ++r) {
      for (int c = 1; c < r; ++c) {
        const ClassIndex index(c, r - c, r);
        for (const auto& [inv, members] : index.classes()) {
          const KraftInvariant du = dual(inv);
          CHECK(du.c() == inv.d());
          CHECK(du.d() == inv.c());
          CHECK(dual(du) == inv);
        }
      }
    }
  }

  TEST_CASE("class counts are binomial") {
    CHECK(class_count(1, 1, 8) == 2);
    CHECK(class_count(2, 1, 8) == 3);
    CHECK(class_count(2, 2, 8) == 6);
    for (int r = 2; r <= 7; ++r) {
      for (int c = 1; c < r; ++c) CHECK(BigInt(class_count(c, r - c, 8)) == oracle::binomial(r, c));
    }
    CHECK_THROWS_AS(class_count(5, 5, 8), Error);
  }

  TEST_CASE("representatives land in their class") {
    for (int r = 2; r <= 7; ++r) {
      for (int c = 1; c < r; ++c) {
        const ClassIndex index(c, r - c, r);
        for (const auto& [inv, members] : index.classes()) {
          CHECK(kraft_invariant(representative(inv)) == inv);
        }
      }
    }
  }

  TEST_CASE("conjugation by the block stabiliser preserves the invariant") {
    CounterRng rng(7, 0);
    for (int trial = 0; trial < 300; ++trial) {
      const int r = 2 + static_cast<int>(rng.below(7));
      const Bt1Datum datum = oracle::random_datum(r, rng);
      const int c = datum.c();
      std::vector<int> images(static_cast<std::size_t>(r));
      std::vector<int> left(static_cast<std::size_t>(c)), right(static_cast<std::size_t>(r - c));
      for (int i = 0; i < c; ++i) left[static_cast<std::size_t>(i)] = i + 1;
      for (int i = 0; i < r - c; ++i) right[static_cast<std::size_t>(i)] = c + i + 1;
      std::shuffle(left.begin(), left.end(), rng);
      std::shuffle(right.begin(), right.end(), rng);
      std::copy(left.begin(), left.end(), images.begin());
      std::copy(right.begin(), right.end(), images.begin() + c);
      const Permutation rho(images);
      CHECK(kraft_invariant(Bt1Datum(c, datum.d(), datum.pi().conjugate_by(rho))) ==
            kraft_invariant(datum));
    }
  }
}

TEST_SUITE("semilinear") {
  TEST_CASE("supersingular pair") {
    const auto pair = build_pair(Bt1Datum(1, 1, parse_permutation("(1 2)")), 2);
    CHECK(pair.f.at(0, 0) == 0);
    CHECK(pair.f.at(1, 0) == 1);
    CHECK(pair.f.at(0, 1) == 0);
    CHECK(pair.f.at(1, 1) == 0);
    CHECK(is_bt1(pair));
    CHECK(p_rank(pair) == 0);
    CHECK(a_number(pair) == 1);
  }

  TEST_CASE("identity data") {
    for (int c = 1; c <= 3; ++c) {
      for (int d = 1; d <= 3; ++d) {
        for (int p : {2, 3}) {
          const auto pair = build_pair(Bt1Datum(c, d, Permutation::identity(c + d)), p);
          CHECK(p_rank(pair) == c);
          CHECK(a_number(pair) == 0);
        }
      }
    }
  }

  TEST_CASE("non-BT1 pairs are rejected") {
    auto pair = build_pair(Bt1Datum(1, 1, parse_permutation("(1 2)")), 2);
    pair.f.at(0, 0) = 1;
    CHECK_FALSE(is_bt1(pair));
    try {
      require_bt1(pair);
      FAIL("expected NotBT1");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kNotBt1);
    }
  }

  TEST_CASE("ranks, p-rank and a-number on every class up to r = 7") {
    for (int r = 2; r <= 7; ++r) {
      for (int c = 1; c < r; ++c) {
        const int d = r - c;
        const ClassIndex index(c, d, r);
        for (const auto& [inv, members] : index.classes()) {
          const auto pair = build_pair(Bt1Datum(c, d, members.front()), 2);
          CHECK(pair.f.rank() == c);
          CHECK(pair.v_twisted.rank() == d);
          CHECK(is_bt1(pair));
          CHECK(p_rank(pair) == static_cast<int>(inv.multiplicity("F")));
          const int a = a_number(pair);
          CHECK(a >= 0);
          CHECK(a <= std::min(c, d));
        }
      }
    }
  }

  TEST_CASE("class-function invariance up to r = 6") {
    for (int r = 2; r <= 6; ++r) {
      for (int c = 1; c < r; ++c) {
        const int d = r - c;
        const ClassIndex index(c, d, r);
        for (const auto& [inv, members] : index.classes()) {
          const Bt1Datum first(c, d, members.front());
          const PairTable t0(first);
          const auto pair0 = build_pair(first, 3);
          const auto profile0 = word_rank_profile(pair0, 3);
          for (const auto& pi : members) {
            const Bt1Datum datum(c, d, pi);
            const PairTable t(datum);
            CHECK(t.count(Refined::kZeroZero) == t0.count(Refined::kZeroZero));
            CHECK(t.count(Refined::kMinusOne) == t0.count(Refined::kMinusOne));
            const auto pair = build_pair(datum, 3);
            CHECK(p_rank(pair) == p_rank(pair0));
            CHECK(a_number(pair) == a_number(pair0));
            CHECK(word_rank_profile(pair, 3) == profile0);
          }
        }
      }
    }
  }
}
