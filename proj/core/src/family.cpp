// SPDX-License-Identifier: Apache-2.0
#include "bt1/family.hpp"

#include "bt1/fixed_points.hpp"
#include "bt1/rng.hpp"

namespace bt1 {

FqMatrix family_block(const FieldPtr& field, const FamilyPoint& x) {
  FqMatrix a(field, 2, 2);
  a.at(0, 0) = x[0];
  a.at(0, 1) = x[1];
  a.at(1, 0) = x[2];
  a.at(1, 1) = x[3];
  return a;
}

SemilinearPair family_pair(int p, int e, const FamilyPoint& x) {
  const FieldPtr field = FiniteField::get(p, e);
  SemilinearPair pair{FqMatrix(field, 4, 4), FqMatrix(field, 4, 4)};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) pair.f.at(i, j) = x[static_cast<std::size_t>(2 * i + j)];
    pair.f.at(2 + i, i) = 1;
    pair.v_twisted.at(2 + i, i) = 1;
    for (int j = 0; j < 2; ++j) {
      pair.v_twisted.at(2 + i, 2 + j) = field->neg(x[static_cast<std::size_t>(2 * i + j)]);
    }
  }
  return pair;
}

std::string to_string(FamilyStratum stratum) {
  switch (stratum) {
    case FamilyStratum::kGeneric: return "generic";
    case FamilyStratum::kHypersurface: return "hypersurface";
    case FamilyStratum::kLocus: return "locus";
    case FamilyStratum::kOrigin: return "origin";
    case FamilyStratum::kOffChart: return "off-chart";
  }
  return "?";
}

FamilyStratum family_stratum(const FiniteField& f, const FamilyPoint& x) {
  if (f.mul(x[0], x[3]) != f.mul(x[1], x[2])) return FamilyStratum::kGeneric;
  if (x[0] == 0) {
    return x[1] == 0 && x[2] == 0 && x[3] != 0 ? FamilyStratum::kOrigin : FamilyStratum::kOffChart;
  }
  const auto p = static_cast<std::uint64_t>(f.p());
  const auto h = f.add(f.pow(x[0], p), f.mul(x[3], f.pow(x[2], p - 1)));
  return h == 0 ? FamilyStratum::kLocus : FamilyStratum::kHypersurface;
}

std::optional<int> family_predicted_rank(FamilyStratum stratum) {
  switch (stratum) {
    case FamilyStratum::kGeneric: return 2;
    case FamilyStratum::kHypersurface: return 1;
    case FamilyStratum::kLocus: return 0;
    case FamilyStratum::kOrigin: return 1;
    case FamilyStratum::kOffChart: return std::nullopt;
  }
  return std::nullopt;
}

FamilyEvaluation family_evaluate(int p, int e, const FamilyPoint& x, bool with_oracle) {
  const FieldPtr field = FiniteField::get(p, e);
  FamilyEvaluation out;
  out.x = x;
  out.stratum = family_stratum(*field, x);
  out.predicted = family_predicted_rank(out.stratum);
  out.stable_rank = p_rank(family_pair(p, e, x));
  if (out.predicted && *out.predicted != out.stable_rank) out.ok = false;
  if (with_oracle) {
    // Fixed points of F on the full module project isomorphically onto the
    // first block: z2 = z1^(p) and z1 = A1 z1^(p).
    out.oracle_rank = stabilized_fixed_point_count(family_block(field, x)).log_p_count;
    if (*out.oracle_rank != out.stable_rank) out.ok = false;
  }
  return out;
}

FamilyReport family_sample(int p, int e, int samples, std::uint64_t seed, bool with_oracle) {
  const FieldPtr field = FiniteField::get(p, e);
  const FiniteField& f = *field;
  FamilyReport report;
  report.p = p;
  report.e = e;
  report.modulus = f.modulus_string();
  report.seed = seed;
  CounterRng rng(seed);
  auto nonzero = [&] { return 1 + rng.below(f.q() - 1); };
  for (int k = 0; k < samples; ++k) {
    FamilyPoint x{};
    switch (k % 3) {
      case 0:
        for (auto& v : x) v = f.random(rng);
        break;
      case 1:
        x[0] = nonzero();
        x[1] = f.random(rng);
        x[2] = f.random(rng);
        x[3] = f.mul(f.mul(x[1], x[2]), f.inv(x[0]));
        break;
      default: {
        x[0] = nonzero();
        x[2] = nonzero();
        const auto pp = static_cast<std::uint64_t>(p);
        x[1] = f.neg(f.mul(f.pow(x[0], pp + 1), f.inv(f.pow(x[2], pp))));
        x[3] = f.mul(f.mul(x[1], x[2]), f.inv(x[0]));
        break;
      }
    }
    FamilyEvaluation eval = family_evaluate(p, e, x, with_oracle);
    if (!eval.ok) ++report.mismatches;
    report.points.push_back(std::move(eval));
  }
  return report;
}

}  // namespace bt1
