// SPDX-License-Identifier: Apache-2.0
#include "bt1/certificate.hpp"

#include <algorithm>

#include "bt1/errors.hpp"
#include "bt1/exact_lp.hpp"

namespace bt1 {
namespace {

Rational weighted_degree(const Monomial& m, const std::map<Pair, Rational>& weights, bool& complete) {
  Rational total = 0;
  for (const auto& [var, e] : m.x_powers) {
    const auto it = weights.find(var);
    if (it == weights.end()) {
      complete = false;
      continue;
    }
    total += it->second * e;
  }
  return total;
}

}  // namespace

WeightCertificate check_certificate(const PolySystem& system, const std::map<Pair, Rational>& weights) {
  WeightCertificate cert;
  cert.weights = weights;
  bool well_formed = true;
  for (const auto& [var, mu] : weights) {
    if (mu <= 0) well_formed = false;
  }
  for (const auto& eq : system.equations) {
    const auto it = weights.find(eq.var);
    if (it == weights.end()) {
      well_formed = false;
      continue;
    }
    const Rational bound = it->second * eq.lhs_degree;
    for (const auto& m : eq.rhs) {
      const Rational deg = weighted_degree(m, weights, well_formed);
      if (deg >= bound) cert.violations.push_back({eq.var, m, deg, bound});
    }
  }
  cert.satisfied = well_formed && cert.violations.empty();
  return cert;
}

std::map<Pair, Rational> default_weights(const PolySystem& system) {
  int top = 0;
  for (const auto& eq : system.equations) top = std::max(top, eq.nu.value_or(0));
  std::map<Pair, Rational> out;
  for (const auto& eq : system.equations) {
    out[eq.var] = Rational(boost::multiprecision::pow(BigInt(system.p), top - eq.nu.value_or(0)));
  }
  return out;
}

WeightCertificate default_certificate(const PolySystem& system, const PairTable& table, int p) {
  WeightCertificate cert = check_certificate(system, default_weights(system));
  cert.cover_exponent = static_cast<int>(table.count(Refined::kZeroZero));
  cert.cover_degree = boost::multiprecision::pow(BigInt(p), cert.cover_exponent);
  return cert;
}

std::optional<std::map<Pair, Rational>> weight_search(const PolySystem& system, int max_vars) {
  std::vector<Pair> vars = system.variables();
  for (const auto& eq : system.equations) {
    for (const auto& m : eq.rhs) {
      for (const auto& [var, e] : m.x_powers) {
        if (!std::binary_search(vars.begin(), vars.end(), var)) {
          vars.insert(std::upper_bound(vars.begin(), vars.end(), var), var);
        }
      }
    }
  }
  if (static_cast<int>(vars.size()) > max_vars) {
    fail(ErrorCode::kDimensionCeiling, std::to_string(vars.size()) + " weight variables exceed the LP bound " +
                                           std::to_string(max_vars));
  }
  auto column = [&](Pair var) {
    return static_cast<std::size_t>(std::lower_bound(vars.begin(), vars.end(), var) - vars.begin());
  };

  // mu = 1 + lambda, lambda >= 0:
  // lambda_l d_l - sum lambda_i v_i >= 1 - d_l + sum v_i.
  LpProblem lp;
  lp.num_vars = static_cast<int>(vars.size());
  for (const auto& eq : system.equations) {
    for (const auto& m : eq.rhs) {
      std::vector<Rational> row(vars.size(), Rational(0));
      Rational rhs = Rational(1 - eq.lhs_degree);
      row[column(eq.var)] += eq.lhs_degree;
      for (const auto& [var, e] : m.x_powers) {
        row[column(var)] -= e;
        rhs += e;
      }
      lp.rows.push_back(std::move(row));
      lp.rhs.push_back(std::move(rhs));
    }
  }
  const auto point = find_feasible_point(lp);
  if (!point) return std::nullopt;
  std::map<Pair, Rational> weights;
  for (std::size_t k = 0; k < vars.size(); ++k) weights[vars[k]] = 1 + (*point)[k];
  return weights;
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::kCertifiedDefault: return "CertifiedDefault";
    case Verdict::kCertifiedSearched: return "CertifiedSearched";
    case Verdict::kNotCertified: return "NotCertified";
  }
  return "?";
}

FinitenessReport finiteness_report(const Bt1Datum& datum, int p) {
  const PairTable table(datum);
  FinitenessReport report;
  report.p = p;
  report.kappa_pi = kappa_of_perm(table, p).kappa_pi;
  report.system = gen_system(table, p);
  report.default_cert = default_certificate(report.system, table, p);
  report.cover_exponent = report.default_cert.cover_exponent;
  report.cover_degree = report.default_cert.cover_degree;
  if (report.default_cert.satisfied) {
    report.verdict = Verdict::kCertifiedDefault;
    report.degree_asserted = true;
    return report;
  }
  report.elimination = eliminate_linear(report.system);
  if (const auto weights = weight_search(report.elimination->system)) {
    WeightCertificate cert = check_certificate(report.elimination->system, *weights);
    cert.cover_exponent = report.cover_exponent;
    cert.cover_degree = report.cover_degree;
    if (cert.satisfied) report.verdict = Verdict::kCertifiedSearched;
    report.searched_cert = std::move(cert);
  }
  return report;
}

}  // namespace bt1
