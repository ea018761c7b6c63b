// SPDX-License-Identifier: Apache-2.0
#include "bt1/serialize.hpp"

#include <limits>

#include "bt1/errors.hpp"

namespace bt1 {
namespace {

Json big_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

BigInt big_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return BigInt(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  fail(ErrorCode::kParse, "expected an integer, got " + j.dump());
}

template <typename T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Json refined_sets(const PairTable& table) {
  Json out = Json::object();
  for (auto kind : {Refined::kMinusOne, Refined::kMinusTwo, Refined::kZeroZero, Refined::kPlusOne,
                    Refined::kPlusTwo}) {
    Json list = Json::array();
    for (const Pair& p : table.pairs(kind)) list.push_back(to_json(p));
    out[std::string(to_string(kind))] = list;
  }
  return out;
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::kParse, std::string("malformed JSON: ") + e.what());
  }
}

Json to_json(const Rational& q) {
  Json j;
  j["num"] = big_to_json(numerator(q));
  j["den"] = big_to_json(denominator(q));
  return j;
}

Rational rational_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) {
    fail(ErrorCode::kParse, "expected {\"num\",\"den\"}, got " + j.dump());
  }
  const BigInt den = big_from_json(j["den"]);
  if (den == 0) fail(ErrorCode::kParse, "zero denominator");
  return Rational(big_from_json(j["num"]), den);
}

Json to_json(Pair pair) { return Json::array({pair.i, pair.j}); }

Json to_json(const Permutation& pi) {
  Json out = Json::array();
  for (int v : pi.images()) out.push_back(v);
  return out;
}

Json to_json(const PairTable& table) {
  Json j;
  j["c"] = table.c();
  j["d"] = table.d();
  j["pi"] = to_json(table.datum().pi());
  Json pairs = Json::array();
  for (int i = 1; i <= table.r(); ++i) {
    for (int k = 1; k <= table.r(); ++k) {
      const Pair pr{i, k};
      Json cell;
      cell["i"] = i;
      cell["j"] = k;
      cell["region"] = std::string(to_string(table.region(pr)));
      cell["refined"] = std::string(to_string(table.refined(pr)));
      if (auto nu = table.nu(pr)) cell["nu"] = *nu;
      if (auto eta = table.eta(pr)) cell["eta"] = *eta;
      pairs.push_back(cell);
    }
  }
  j["pairs"] = pairs;
  j["sets"] = refined_sets(table);
  return j;
}

Json to_json(const Path& path, int p) {
  Json j;
  j["vertices"] = path.vertices;
  j["kind"] = path.kind == PathKind::kGamma ? "Gamma" : "Delta";
  j["in_gamma1"] = path.in_gamma1;
  j["in_delta1"] = path.in_delta1;
  Json nt = Json::object();
  for (const auto& [t, n] : path.nt) nt[std::to_string(t)] = n;
  j["nt"] = nt;
  j["kappa"] = to_json(kappa_of_path(path, p));
  return j;
}

Json to_json(const KappaReport& report) {
  Json j;
  j["p"] = report.p;
  j["kappa_pi"] = to_json(report.kappa_pi);
  j["witness"] = report.witness ? Json(report.witness->vertices) : Json(nullptr);
  j["kappa_class"] = report.kappa_class ? to_json(*report.kappa_class) : Json(nullptr);
  j["condition_c"] = optional_json(report.condition_c);
  j["dual_kappa_class"] = report.dual_kappa_class ? to_json(*report.dual_kappa_class) : Json(nullptr);
  return j;
}

Json to_json(const KraftInvariant& inv) { return Json(inv.words()); }

Json to_json(const Monomial& monomial, int p) { return to_text(monomial, p); }

Json to_json(const WeightCertificate& cert, int p) {
  Json j;
  Json weights = Json::array();
  for (const auto& [var, mu] : cert.weights) {
    weights.push_back({{"var", to_json(var)}, {"weight", to_json(mu)}});
  }
  j["weights"] = weights;
  j["satisfied"] = cert.satisfied;
  Json violations = Json::array();
  for (const auto& v : cert.violations) {
    violations.push_back({{"equation", to_json(v.equation)},
                          {"monomial", to_json(v.monomial, p)},
                          {"weighted_degree", to_json(v.weighted_degree)},
                          {"bound", to_json(v.bound)}});
  }
  j["violations"] = violations;
  j["cover_exponent"] = cert.cover_exponent;
  j["cover_degree"] = big_to_json(cert.cover_degree);
  return j;
}

Json to_json(const EliminationReport& report) {
  Json j;
  Json eliminated = Json::array();
  for (const Pair& v : report.eliminated) eliminated.push_back(to_json(v));
  Json cyclic = Json::array();
  for (const Pair& v : report.cyclic_linear) cyclic.push_back(to_json(v));
  j["eliminated"] = eliminated;
  j["cyclic_linear"] = cyclic;
  j["system"] = to_text(report.system);
  return j;
}

Json to_json(const FinitenessReport& report) {
  Json j;
  j["p"] = report.p;
  j["verdict"] = std::string(to_string(report.verdict));
  j["kappa_pi"] = to_json(report.kappa_pi);
  j["cover_exponent"] = report.cover_exponent;
  j["cover_degree"] = big_to_json(report.cover_degree);
  j["degree_asserted"] = report.degree_asserted;
  if (!report.degree_asserted) j["degree_note"] = "degree claim not asserted";
  j["system"] = to_text(report.system);
  j["default_certificate"] = to_json(report.default_cert, report.p);
  j["elimination"] = report.elimination ? to_json(*report.elimination) : Json(nullptr);
  j["searched_certificate"] = report.searched_cert ? to_json(*report.searched_cert, report.p) : Json(nullptr);
  return j;
}

Json to_json(const StabilizerReport& report) {
  Json j;
  j["ok"] = report.ok;
  j["p"] = report.p;
  j["e"] = report.e;
  j["trials"] = report.trials;
  j["seed"] = report.seed;
  j["distinct_triples"] = report.distinct_triples;
  j["expected_triples"] = report.expected_triples;
  j["exhaustive"] = report.exhaustive;
  j["counterexample"] = optional_json(report.counterexample);
  return j;
}

Json to_json(const FamilyReport& report) {
  Json j;
  j["p"] = report.p;
  j["e"] = report.e;
  j["modulus"] = report.modulus;
  j["seed"] = report.seed;
  j["mismatches"] = report.mismatches;
  Json points = Json::array();
  for (const auto& pt : report.points) {
    Json entry;
    entry["x"] = Json::array({pt.x[0], pt.x[1], pt.x[2], pt.x[3]});
    entry["stratum"] = to_string(pt.stratum);
    entry["predicted"] = optional_json(pt.predicted);
    entry["p_rank"] = pt.stable_rank;
    entry["oracle_p_rank"] = optional_json(pt.oracle_rank);
    entry["ok"] = pt.ok;
    points.push_back(entry);
  }
  j["points"] = points;
  return j;
}

Json to_json(const CatalogEntry& entry) {
  Json j;
  j["class_key"] = entry.class_key;
  j["c"] = entry.c;
  j["d"] = entry.d;
  j["representative_pi"] = to_json(entry.representative);
  Json per_prime = Json::object();
  for (const auto& [p, pe] : entry.per_prime) {
    Json x;
    x["kappa_class"] = to_json(pe.kappa_class);
    x["condition_c"] = pe.condition_c;
    x["certificate_verdict"] = std::string(to_string(pe.verdict));
    x["cover_degree_exponent"] = pe.cover_exponent;
    x["dim_c10"] = pe.dim_c10;
    x["p_rank"] = pe.p_rank;
    x["a_number"] = pe.a_number;
    x["certified_by"] = to_json(pe.certified_by);
    per_prime[std::to_string(p)] = x;
  }
  j["per_prime"] = per_prime;
  return j;
}

CatalogEntry catalog_entry_from_json(const Json& j) {
  try {
    CatalogEntry entry;
    entry.class_key = j.at("class_key").get<std::string>();
    entry.c = j.at("c").get<int>();
    entry.d = j.at("d").get<int>();
    entry.representative = Permutation(j.at("representative_pi").get<std::vector<int>>());
    for (const auto& [key, x] : j.at("per_prime").items()) {
      PrimeEntry pe;
      pe.kappa_class = rational_from_json(x.at("kappa_class"));
      pe.condition_c = x.at("condition_c").get<bool>();
      const auto verdict = x.at("certificate_verdict").get<std::string>();
      bool known = false;
      for (auto v : {Verdict::kCertifiedDefault, Verdict::kCertifiedSearched, Verdict::kNotCertified}) {
        if (to_string(v) == verdict) {
          pe.verdict = v;
          known = true;
        }
      }
      if (!known) fail(ErrorCode::kParse, "unknown verdict " + verdict);
      pe.cover_exponent = x.at("cover_degree_exponent").get<int>();
      pe.dim_c10 = x.at("dim_c10").get<int>();
      pe.p_rank = x.at("p_rank").get<int>();
      pe.a_number = x.at("a_number").get<int>();
      pe.certified_by = Permutation(x.at("certified_by").get<std::vector<int>>());
      entry.per_prime[std::stoi(key)] = pe;
    }
    return entry;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::kParse, std::string("malformed catalog entry: ") + e.what());
  }
}

}  // namespace bt1
