// SPDX-License-Identifier: Apache-2.0
#include "bt1/kappa.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "bt1/errors.hpp"
#include "bt1/kraft.hpp"

namespace bt1 {

int Path::zero_zero_steps() const {
  int total = 0;
  for (const auto& [t, n] : nt) total += n;
  return total;
}

namespace {

struct Adjacency {
  std::vector<std::vector<int>> zero_zero;
  std::vector<std::vector<int>> plus_two;
};

Adjacency adjacency(const PairTable& table) {
  const int n = table.r();
  Adjacency adj;
  adj.zero_zero.resize(static_cast<std::size_t>(n) + 1);
  adj.plus_two.resize(static_cast<std::size_t>(n) + 1);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const auto kind = table.refined({i, j});
      if (kind == Refined::kZeroZero) adj.zero_zero[static_cast<std::size_t>(i)].push_back(j);
      if (kind == Refined::kPlusTwo) adj.plus_two[static_cast<std::size_t>(i)].push_back(j);
    }
  }
  return adj;
}

class PathCollector {
 public:
  PathCollector(const PairTable& table, PathLimits limits)
      : table_(table), adj_(adjacency(table)), limits_(limits) {}

  std::vector<Path> run() {
    for (int start = 1; start <= table_.r(); ++start) {
      prefix_ = {start};
      extend();
    }
    std::sort(paths_.begin(), paths_.end(), [](const Path& a, const Path& b) {
      if (a.kind != b.kind) return a.kind < b.kind;
      return a.vertices < b.vertices;
    });
    return std::move(paths_);
  }

 private:
  // prefix_ holds a chain of ZeroZero steps.
  void extend() {
    const int v = prefix_.back();
    for (int w : adj_.plus_two[static_cast<std::size_t>(v)]) {
      prefix_.push_back(w);
      emit(PathKind::kGamma);
      for (int u : adj_.zero_zero[static_cast<std::size_t>(w)]) {
        prefix_.push_back(u);
        emit(PathKind::kDelta);
        prefix_.pop_back();
      }
      prefix_.pop_back();
    }
    for (int w : adj_.zero_zero[static_cast<std::size_t>(v)]) {
      prefix_.push_back(w);
      extend();
      prefix_.pop_back();
    }
  }

  void emit(PathKind kind) {
    if (paths_.size() >= limits_.max_paths) {
      fail(ErrorCode::kPathExplosion,
           "more than " + std::to_string(limits_.max_paths) + " Gamma/Delta paths");
    }
    Path path;
    path.vertices = prefix_;
    path.kind = kind;
    for (std::size_t l = 0; l + 1 < prefix_.size(); ++l) {
      const Pair step{prefix_[l], prefix_[l + 1]};
      if (table_.is(step, Refined::kZeroZero)) ++path.nt[*table_.nu(step)];
    }
    const int first = prefix_.front();
    const int second = prefix_[1];
    const int last = prefix_.back();
    const bool selected = table_.is({first, last}, Refined::kPlusOne) &&
                          !table_.is({second, last}, Refined::kPlusOne);
    path.in_gamma1 = selected && kind == PathKind::kGamma;
    path.in_delta1 = selected && kind == PathKind::kDelta;
    paths_.push_back(std::move(path));
  }

  const PairTable& table_;
  Adjacency adj_;
  PathLimits limits_;
  std::vector<int> prefix_;
  std::vector<Path> paths_;
};

}  // namespace

std::vector<Path> enumerate_paths(const PairTable& table, PathLimits limits) {
  return PathCollector(table, limits).run();
}

Rational kappa_of_path(const Path& path, int p) {
  if (path.nt.empty()) return Rational(0);
  const int top = path.nt.rbegin()->first;
  BigInt num = 0;
  for (const auto& [t, n] : path.nt) num += BigInt(n) * boost::multiprecision::pow(BigInt(p), top - t);
  return Rational(num, boost::multiprecision::pow(BigInt(p), top));
}

KappaReport kappa_of_perm(const PairTable& table, int p, PathLimits limits) {
  KappaReport report;
  report.p = p;
  report.kappa_pi = 0;
  for (auto& path : enumerate_paths(table, limits)) {
    if (!path.selected()) continue;
    Rational value = kappa_of_path(path, p);
    if (!report.witness || value > report.kappa_pi) {
      report.kappa_pi = value;
      report.witness = std::move(path);
    }
  }
  return report;
}

KappaReport kappa_of_perm(const Bt1Datum& datum, int p, PathLimits limits) {
  return kappa_of_perm(PairTable(datum), p, limits);
}

int default_max_r() {
  if (const char* env = std::getenv("BT1_MAX_R")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v <= 12) return static_cast<int>(v);
  }
  return 8;
}

std::vector<Permutation> class_representatives(const Bt1Datum& datum, int max_r) {
  if (datum.r() > max_r) {
    fail(ErrorCode::kRTooLarge, "r = " + std::to_string(datum.r()) +
                                    " exceeds the class enumeration bound " + std::to_string(max_r));
  }
  const KraftInvariant target = kraft_invariant(datum);
  std::vector<Permutation> out;
  Permutation pi = Permutation::identity(datum.r());
  do {
    if (kraft_invariant(Bt1Datum(datum.c(), datum.d(), pi)) == target) out.push_back(pi);
  } while (pi.next());
  return out;
}

Rational kappa_of_class(const Bt1Datum& datum, int p, int max_r) {
  std::optional<Rational> best;
  for (const auto& pi : class_representatives(datum, max_r)) {
    Rational value = kappa_of_perm(Bt1Datum(datum.c(), datum.d(), pi), p).kappa_pi;
    if (!best || value < *best) best = value;
  }
  return *best;
}

KappaReport condition_c(const Bt1Datum& datum, int p, int max_r) {
  KappaReport report = kappa_of_perm(datum, p);
  report.kappa_class = kappa_of_class(datum, p, max_r);
  const Bt1Datum dual_datum = representative(dual(kraft_invariant(datum)));
  report.dual_kappa_class = kappa_of_class(dual_datum, p, max_r);
  report.condition_c = *report.kappa_class < 1 || *report.dual_kappa_class < 1;
  return report;
}

int scalar_action_period(const Bt1Datum& datum) {
  const auto cycles = datum.pi().cycles();
  int g = 0;
  for (const auto& cyc : cycles) g = std::gcd(g, static_cast<int>(cyc.size()));
  for (int a = g; a >= 2; --a) {
    if (g % a) continue;
    bool coherent = true;
    for (const auto& cyc : cycles) {
      int residue = -1;
      for (std::size_t pos = 0; pos < cyc.size() && coherent; ++pos) {
        if (datum.is_f_index(cyc[pos])) continue;
        const int here = static_cast<int>(pos) % a;
        if (residue < 0) residue = here;
        coherent = residue == here;
      }
      if (!coherent) break;
    }
    if (coherent) return a;
  }
  return 1;
}

}  // namespace bt1
