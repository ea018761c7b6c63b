// SPDX-License-Identifier: Apache-2.0
#include "bt1/pair_table.hpp"

#include <algorithm>
#include <functional>

#include "bt1/errors.hpp"

namespace bt1 {

std::string_view to_string(Region region) {
  switch (region) {
    case Region::kPlus: return "Plus";
    case Region::kZero: return "Zero";
    case Region::kMinus: return "Minus";
  }
  return "?";
}

std::string_view to_string(Refined refined) {
  switch (refined) {
    case Refined::kPlusOne: return "PlusOne";
    case Refined::kPlusTwo: return "PlusTwo";
    case Refined::kZeroZero: return "ZeroZero";
    case Refined::kZeroPlain: return "ZeroPlain";
    case Refined::kMinusOne: return "MinusOne";
    case Refined::kMinusTwo: return "MinusTwo";
  }
  return "?";
}

Refined parse_refined(std::string_view name) {
  for (auto kind : {Refined::kPlusOne, Refined::kPlusTwo, Refined::kZeroZero, Refined::kZeroPlain,
                    Refined::kMinusOne, Refined::kMinusTwo}) {
    if (to_string(kind) == name) return kind;
  }
  fail(ErrorCode::kParse, "unknown refined set '" + std::string(name) + "'");
}

Region classify_region(const Bt1Datum& datum, Pair pair) {
  const int c = datum.c();
  if (pair.j <= c && c < pair.i) return Region::kPlus;
  if (pair.i <= c && c < pair.j) return Region::kMinus;
  return Region::kZero;
}

std::vector<Region> classify_regions(const Bt1Datum& datum) {
  const int r = datum.r();
  std::vector<Region> out;
  out.reserve(static_cast<std::size_t>(r * r));
  for (int i = 1; i <= r; ++i) {
    for (int j = 1; j <= r; ++j) out.push_back(classify_region(datum, {i, j}));
  }
  return out;
}

int pi_order(const Bt1Datum& datum, Pair pair) {
  if (classify_region(datum, pair) != Region::kMinus) {
    fail(ErrorCode::kNotMinusPair, to_string(pair) + " is not in the Minus region");
  }
  const int bound = datum.r() * datum.r();
  Pair q = pair;
  for (int s = 1; s <= bound; ++s) {
    q = datum.pi().apply(q);
    if (classify_region(datum, q) != Region::kZero) return s;
  }
  fail(ErrorCode::kInternal, "pi-order walk exceeded r^2 steps");
}

PairTable::PairTable(Bt1Datum datum) : datum_(std::move(datum)) {
  const int n = r();
  const auto cells = static_cast<std::size_t>(n * n);
  region_ = classify_regions(datum_);
  refined_.assign(cells, Refined::kZeroPlain);
  nu_.assign(cells, -1);
  eta_.assign(cells, -1);
  origin_.assign(cells, Pair{});

  std::vector<bool> assigned(cells, false);
  auto mark = [&](Pair p, Refined kind, int nu, int eta, Pair from) {
    const auto k = index(p);
    if (assigned[k]) fail(ErrorCode::kInternal, "pair " + to_string(p) + " reached by two orbit walks");
    assigned[k] = true;
    refined_[k] = kind;
    nu_[k] = nu;
    eta_[k] = eta;
    origin_[k] = from;
  };

  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const Pair start{i, j};
      if (region(start) != Region::kMinus) continue;
      const int order = pi_order(datum_, start);
      const Pair end = datum_.pi().apply(start, order);
      if (region(end) == Region::kMinus) {
        const auto k = index(start);
        refined_[k] = Refined::kMinusTwo;
        nu_[k] = order;
        assigned[k] = true;
        continue;
      }
      mark(start, Refined::kMinusOne, order, 0, start);
      for (int s = 1; s < order; ++s) {
        mark(datum_.pi().apply(start, s), Refined::kZeroZero, order - s, s, start);
      }
      mark(end, Refined::kPlusOne, 0, order, start);
    }
  }
  for (std::size_t k = 0; k < cells; ++k) {
    if (assigned[k]) continue;
    refined_[k] = region_[k] == Region::kPlus ? Refined::kPlusTwo : Refined::kZeroPlain;
  }
}

std::optional<Pair> PairTable::origin(Pair p) const {
  switch (refined(p)) {
    case Refined::kPlusOne:
    case Refined::kZeroZero:
    case Refined::kMinusOne: return origin_[index(p)];
    default: return std::nullopt;
  }
}

std::vector<Pair> PairTable::pairs(Refined kind) const {
  std::vector<Pair> out;
  for (int i = 1; i <= r(); ++i) {
    for (int j = 1; j <= r(); ++j) {
      if (refined({i, j}) == kind) out.push_back({i, j});
    }
  }
  return out;
}

std::size_t PairTable::count(Refined kind) const {
  return static_cast<std::size_t>(std::count(refined_.begin(), refined_.end(), kind));
}

namespace {

// Longest ZeroZero chain starting at each vertex (the ZeroZero graph is acyclic).
std::vector<int> longest_from(const PairTable& table) {
  const int n = table.r();
  std::vector<int> memo(static_cast<std::size_t>(n) + 1, -1);
  std::function<int(int)> visit = [&](int v) -> int {
    auto& slot = memo[static_cast<std::size_t>(v)];
    if (slot >= 0) return slot;
    int best = 0;
    for (int w = 1; w <= n; ++w) {
      if (table.is({v, w}, Refined::kZeroZero)) best = std::max(best, 1 + visit(w));
    }
    return slot = best;
  };
  for (int v = 1; v <= n; ++v) visit(v);
  return memo;
}

std::vector<int> longest_into(const PairTable& table) {
  const int n = table.r();
  std::vector<int> memo(static_cast<std::size_t>(n) + 1, -1);
  std::function<int(int)> visit = [&](int v) -> int {
    auto& slot = memo[static_cast<std::size_t>(v)];
    if (slot >= 0) return slot;
    int best = 0;
    for (int u = 1; u <= n; ++u) {
      if (table.is({u, v}, Refined::kZeroZero)) best = std::max(best, 1 + visit(u));
    }
    return slot = best;
  };
  for (int v = 1; v <= n; ++v) visit(v);
  return memo;
}

}  // namespace

int composable_chain_max(const PairTable& table) {
  const auto from = longest_from(table);
  return *std::max_element(from.begin() + 1, from.end());
}

int chain_next_to_region(const PairTable& table, Region region, bool ends_before_region) {
  const int n = table.r();
  const auto into = longest_into(table);
  const auto from = longest_from(table);
  int best = -1;
  for (int v = 1; v <= n; ++v) {
    bool touches = false;
    for (int x = 1; x <= n && !touches; ++x) {
      const Pair p = ends_before_region ? Pair{v, x} : Pair{x, v};
      touches = table.region(p) == region;
    }
    if (!touches) continue;
    best = std::max(best, ends_before_region ? into[static_cast<std::size_t>(v)]
                                             : from[static_cast<std::size_t>(v)]);
  }
  return best;
}

}  // namespace bt1
