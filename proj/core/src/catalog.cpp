// SPDX-License-Identifier: Apache-2.0
#include "bt1/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <thread>

#include "bt1/errors.hpp"
#include "bt1/semilinear.hpp"
#include "bt1/serialize.hpp"

namespace bt1 {
namespace {

// Kappa of every member for every prime, reusing one path enumeration each.
std::map<int, std::vector<Rational>> member_kappas(int c, int d, const std::vector<Permutation>& members,
                                                   const std::vector<int>& primes) {
  std::map<int, std::vector<Rational>> out;
  for (const auto& pi : members) {
    const PairTable table(Bt1Datum(c, d, pi));
    const auto paths = enumerate_paths(table);
    for (int p : primes) {
      Rational best = 0;
      for (const auto& path : paths) {
        if (!path.selected()) continue;
        Rational v = kappa_of_path(path, p);
        if (v > best) best = v;
      }
      out[p].push_back(best);
    }
  }
  return out;
}

}  // namespace

CatalogEntry catalog_entry(const KraftInvariant& inv, const std::vector<Permutation>& members,
                           const std::vector<Permutation>& dual_members, const std::vector<int>& primes) {
  if (members.empty() || dual_members.empty()) fail(ErrorCode::kInternal, "empty Kraft class");
  CatalogEntry entry;
  entry.class_key = inv.key();
  entry.c = inv.c();
  entry.d = inv.d();
  entry.representative = members.front();
  const Bt1Datum rep(entry.c, entry.d, entry.representative);
  const PairTable rep_table(rep);

  const auto kappas = member_kappas(entry.c, entry.d, members, primes);
  const auto dual_kappas = member_kappas(entry.d, entry.c, dual_members, primes);
  for (int p : primes) {
    const auto& values = kappas.at(p);
    std::size_t best = 0;
    for (std::size_t k = 1; k < values.size(); ++k) {
      if (values[k] < values[best]) best = k;
    }
    Rational dual_best = dual_kappas.at(p).front();
    for (const auto& v : dual_kappas.at(p)) dual_best = v < dual_best ? v : dual_best;

    PrimeEntry pe;
    pe.kappa_class = values[best];
    pe.condition_c = pe.kappa_class < 1 || dual_best < 1;
    pe.certified_by = members[best];
    pe.verdict = finiteness_report(Bt1Datum(entry.c, entry.d, members[best]), p).verdict;
    pe.cover_exponent = static_cast<int>(rep_table.count(Refined::kZeroZero));
    pe.dim_c10 = static_cast<int>(rep_table.count(Refined::kMinusOne));
    const SemilinearPair pair = build_pair(rep, p);
    pe.p_rank = p_rank(pair);
    pe.a_number = a_number(pair);
    entry.per_prime[p] = pe;
  }
  return entry;
}

int resolve_jobs(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("BT1_JOBS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v <= 1024) return static_cast<int>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

std::vector<CatalogEntry> sweep(int c, int d, const std::vector<int>& primes, int jobs, int max_r) {
  if (primes.empty()) fail(ErrorCode::kInvalidDatum, "sweep needs at least one prime");
  for (int p : primes) {
    if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) {
      fail(ErrorCode::kInvalidDatum, std::to_string(p) + " is not prime");
    }
  }
  const ClassIndex index(c, d, max_r);
  const ClassIndex dual_index(d, c, max_r);
  std::vector<const std::pair<const KraftInvariant, std::vector<Permutation>>*> work;
  for (const auto& item : index.classes()) work.push_back(&item);

  std::vector<CatalogEntry> out(work.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    while (true) {
      const std::size_t k = next.fetch_add(1);
      if (k >= work.size()) return;
      try {
        const auto& [inv, members] = *work[k];
        out[k] = catalog_entry(inv, members, dual_index.members(dual(inv)), primes);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        next = work.size();
      }
    }
  };
  const int n = std::max(1, std::min(resolve_jobs(jobs), static_cast<int>(work.size())));
  std::vector<std::thread> threads;
  for (int t = 1; t < n; ++t) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
  std::sort(out.begin(), out.end(),
            [](const CatalogEntry& a, const CatalogEntry& b) { return a.class_key < b.class_key; });
  return out;
}

void write_catalog(const std::filesystem::path& path, const std::vector<CatalogEntry>& entries) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorCode::kInvalidDatum, "cannot open " + tmp.string() + " for writing");
    for (const auto& entry : entries) out << to_json(entry).dump() << '\n';
    out.flush();
    if (!out) fail(ErrorCode::kInternal, "write to " + tmp.string() + " failed");
  }
  std::filesystem::rename(tmp, path);
}

std::vector<CatalogEntry> read_catalog(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::kParse, "cannot open " + path.string());
  std::vector<CatalogEntry> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    out.push_back(catalog_entry_from_json(parse_json(line)));
  }
  return out;
}

}  // namespace bt1
