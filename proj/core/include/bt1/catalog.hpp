// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "bt1/certificate.hpp"
#include "bt1/kraft.hpp"

namespace bt1 {

struct PrimeEntry {
  Rational kappa_class;
  bool condition_c = false;
  Verdict verdict = Verdict::kNotCertified;
  int cover_exponent = 0;  // |ZeroZero|
  int dim_c10 = 0;         // |MinusOne|
  int p_rank = 0;
  int a_number = 0;
  Permutation certified_by;  // kappa-minimising member used for the verdict
  friend bool operator==(const PrimeEntry&, const PrimeEntry&) = default;
};

/// Class functions of one Kraft class. The representative is the
/// lexicographically least member.
struct CatalogEntry {
  std::string class_key;
  int c = 0;
  int d = 0;
  Permutation representative;
  std::map<int, PrimeEntry> per_prime;
  friend bool operator==(const CatalogEntry&, const CatalogEntry&) = default;
};

/// Computes one entry from the sorted members of the class and of its dual.
CatalogEntry catalog_entry(const KraftInvariant& inv, const std::vector<Permutation>& members,
                           const std::vector<Permutation>& dual_members, const std::vector<int>& primes);

/// Worker count: `requested` if positive, else BT1_JOBS, else hardware concurrency.
int resolve_jobs(int requested);

/// All binomial(c+d, c) classes, sorted by class key; output does not depend
/// on `jobs`. Throws Error(kRTooLarge) past max_r.
std::vector<CatalogEntry> sweep(int c, int d, const std::vector<int>& primes, int jobs, int max_r);

/// JSONL, one entry per line, written to a temporary file and renamed.
void write_catalog(const std::filesystem::path& path, const std::vector<CatalogEntry>& entries);
std::vector<CatalogEntry> read_catalog(const std::filesystem::path& path);

}  // namespace bt1
