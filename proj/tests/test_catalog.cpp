// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <filesystem>
#include <fstream>

#include "doctest.h"

#include "bt1/catalog.hpp"
#include "bt1/diagram.hpp"
#include "bt1/errors.hpp"
#include "bt1/serialize.hpp"
#include "support/oracles.hpp"

using namespace bt1;

namespace {

constexpr const char* kEightCycle =
    "| | | | o o o /\n"
    "= = = | o o / .\n"
    "= = = | o / . .\n"
    "= = = | / . . .\n"
    ". . . / + # # #\n"
    ". . / o + # # #\n"
    ". / o o + # # #\n"
    "/ o o o + + + +\n";

std::filesystem::path temp_path(const char* name) {
  return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_SUITE("diagram") {
  TEST_CASE("8-cycle grid") {
    CHECK(diagram_ascii(PairTable(Bt1Datum(4, 4, Permutation::cycle(8)))) == kEightCycle);
  }

  TEST_CASE("glyph counts match the refined sets") {
    for (const auto& datum : oracle::all_data(5)) {
      const PairTable t(datum);
      const std::string grid = diagram_ascii(t);
      CHECK(static_cast<std::size_t>(std::count(grid.begin(), grid.end(), 'o')) == t.count(Refined::kZeroZero));
      CHECK(static_cast<std::size_t>(std::count(grid.begin(), grid.end(), '|')) == t.count(Refined::kMinusOne));
      CHECK(static_cast<std::size_t>(std::count(grid.begin(), grid.end(), '#')) == t.count(Refined::kPlusTwo));
    }
  }

  TEST_CASE("svg is well formed") {
    const PairTable t(Bt1Datum(3, 2, Permutation::cycle(5)));
    const std::string svg = diagram_svg(t);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
    std::size_t opens = 0, self_closed = 0, closes = 0;
    for (std::size_t k = 0; k + 1 < svg.size(); ++k) {
      if (svg[k] == '<' && svg[k + 1] == '/') ++closes;
      else if (svg[k] == '<' && svg[k + 1] != '?' && svg[k + 1] != '!') ++opens;
      if (svg[k] == '/' && svg[k + 1] == '>') ++self_closed;
    }
    CHECK(opens == closes + self_closed);
    CHECK(svg.find("data-i=\"4\" data-j=\"5\"") != std::string::npos);
  }
}

TEST_SUITE("serialize") {
  TEST_CASE("kappa report shape") {
    auto report = condition_c(Bt1Datum(3, 2, Permutation::cycle(5)), 2);
    const Json j = to_json(report);
    CHECK(j.at("p") == 2);
    CHECK(j.at("kappa_pi").at("num") == 1);
    CHECK(j.at("kappa_pi").at("den") == 1);
    CHECK(j.at("witness").is_array());
    CHECK(j.contains("kappa_class"));
    CHECK(j.contains("condition_c"));
    CHECK(j.contains("dual_kappa_class"));
    CHECK(rational_from_json(j.at("kappa_pi")) == 1);
  }

  TEST_CASE("rationals and catalog entries round trip") {
    for (const Rational q : {Rational(0), Rational(22, 27), Rational(-3, 4)}) {
      CHECK(rational_from_json(parse_json(to_json(q).dump())) == q);
    }
    for (const auto& entry : sweep(2, 3, {2, 3}, 2, 8)) {
      CHECK(catalog_entry_from_json(parse_json(to_json(entry).dump())) == entry);
    }
  }

  TEST_CASE("malformed JSON") {
    try {
      parse_json("{\"a\":");
      FAIL("expected parse error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kParse);
    }
  }
}

TEST_SUITE("catalog") {
  TEST_CASE("sweep covers every class once, in key order") {
    for (auto [c, d] : std::vector<std::pair<int, int>>{{1, 1}, {2, 2}, {3, 2}, {2, 4}}) {
      const auto entries = sweep(c, d, {2, 3, 5}, 2, 8);
      CHECK(BigInt(entries.size()) == oracle::binomial(c + d, c));
      for (std::size_t k = 1; k < entries.size(); ++k) CHECK(entries[k - 1].class_key < entries[k].class_key);
      for (const auto& e : entries) {
        CHECK(kraft_invariant(Bt1Datum(c, d, e.representative)).key() == e.class_key);
        CHECK(e.per_prime.size() == 3);
        for (const auto& [p, pe] : e.per_prime) {
          const Bt1Datum witness(c, d, pe.certified_by);
          CHECK(kraft_invariant(witness).key() == e.class_key);
          CHECK(kappa_of_perm(witness, p).kappa_pi == pe.kappa_class);
          CHECK(pe.a_number <= std::min(c, d));
          if (p >= 5) CHECK(pe.condition_c);
        }
      }
    }
  }

  TEST_CASE("results do not depend on the job count") {
    CHECK(sweep(3, 3, {2, 3}, 1, 8) == sweep(3, 3, {2, 3}, 4, 8));
  }

  TEST_CASE("catalog files round trip and rewrite idempotently") {
    const auto path = temp_path("bt1_catalog_test.jsonl");
    const auto entries = sweep(2, 2, {2}, 1, 8);
    write_catalog(path, entries);
    std::ifstream in1(path);
    const std::string first((std::istreambuf_iterator<char>(in1)), {});
    CHECK(read_catalog(path) == entries);
    write_catalog(path, read_catalog(path));
    std::ifstream in2(path);
    const std::string second((std::istreambuf_iterator<char>(in2)), {});
    CHECK(first == second);
    std::filesystem::remove(path);
  }

  TEST_CASE("job resolution") {
    CHECK(resolve_jobs(3) == 3);
    CHECK(resolve_jobs(0) >= 1);
  }
}
