// SPDX-License-Identifier: Apache-2.0
#include "bt1/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "bt1/errors.hpp"

namespace bt1 {

std::string to_string(const Pair& pair) {
  return "(" + std::to_string(pair.i) + "," + std::to_string(pair.j) + ")";
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int r = size();
  std::vector<bool> seen(static_cast<std::size_t>(r) + 1, false);
  for (int v : images_) {
    if (v < 1 || v > r || seen[static_cast<std::size_t>(v)]) {
      fail(ErrorCode::kInvalidDatum, "not a permutation of {1.." + std::to_string(r) + "}");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int r) {
  std::vector<int> images(static_cast<std::size_t>(r));
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::cycle(int r) {
  std::vector<int> images(static_cast<std::size_t>(r));
  for (int i = 1; i <= r; ++i) images[static_cast<std::size_t>(i - 1)] = i % r + 1;
  return Permutation(std::move(images));
}

int Permutation::power(int i, int k) const {
  for (int s = 0; s < k; ++s) i = (*this)(i);
  return i;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 1; i <= size(); ++i) inv[static_cast<std::size_t>((*this)(i) - 1)] = i;
  return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& other) const {
  std::vector<int> out(images_.size());
  for (int i = 1; i <= size(); ++i) out[static_cast<std::size_t>(i - 1)] = (*this)(other(i));
  return Permutation(std::move(out));
}

Permutation Permutation::conjugate_by(const Permutation& rho) const {
  return rho.inverse().compose(*this).compose(rho);
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size() + 1, false);
  for (int start = 1; start <= size(); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> cyc;
    for (int i = start; !seen[static_cast<std::size_t>(i)]; i = (*this)(i)) {
      seen[static_cast<std::size_t>(i)] = true;
      cyc.push_back(i);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::string Permutation::one_line() const {
  std::string s = "[";
  for (std::size_t k = 0; k < images_.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(images_[k]);
  }
  return s + "]";
}

std::string Permutation::cycle_string() const {
  std::string s;
  for (const auto& cyc : cycles()) {
    if (cyc.size() < 2) continue;
    s += "(";
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      if (k) s += " ";
      s += std::to_string(cyc[k]);
    }
    s += ")";
  }
  return s.empty() ? "()" : s;
}

bool Permutation::next() { return std::next_permutation(images_.begin(), images_.end()); }

namespace {

std::vector<int> read_integers(std::string_view text, std::string_view context) {
  std::vector<int> values;
  std::size_t k = 0;
  while (k < text.size()) {
    const char ch = text[k];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      int v = 0;
      while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) {
        v = v * 10 + (text[k] - '0');
        if (v > 1'000'000) fail(ErrorCode::kParse, "index too large in " + std::string(context));
        ++k;
      }
      values.push_back(v);
    } else if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
      ++k;
    } else {
      fail(ErrorCode::kParse, "unexpected character '" + std::string(1, ch) + "' in " +
                                  std::string(context));
    }
  }
  return values;
}

}  // namespace

Permutation parse_permutation(std::string_view text, std::optional<int> degree) {
  const auto first = text.find_first_not_of(" \t");
  if (first == std::string_view::npos) fail(ErrorCode::kParse, "empty permutation");
  text.remove_prefix(first);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }

  if (text.front() == '(') {
    std::vector<std::vector<int>> cycles;
    int largest = 0;
    std::size_t k = 0;
    while (k < text.size()) {
      if (std::isspace(static_cast<unsigned char>(text[k]))) {
        ++k;
        continue;
      }
      if (text[k] != '(') fail(ErrorCode::kParse, "expected '(' in cycle notation");
      const auto close = text.find(')', k);
      if (close == std::string_view::npos) fail(ErrorCode::kParse, "unbalanced '(' in cycle notation");
      auto body = text.substr(k + 1, close - k - 1);
      if (body.find('(') != std::string_view::npos) fail(ErrorCode::kParse, "nested '('");
      auto cyc = read_integers(body, "cycle");
      for (int v : cyc) {
        if (v < 1) fail(ErrorCode::kParse, "cycle entries must be positive");
        largest = std::max(largest, v);
      }
      cycles.push_back(std::move(cyc));
      k = close + 1;
    }
    const int r = degree.value_or(largest);
    if (largest > r) fail(ErrorCode::kInvalidDatum, "cycle mentions a point larger than the degree");
    std::vector<int> images(static_cast<std::size_t>(r));
    std::iota(images.begin(), images.end(), 1);
    std::vector<bool> used(static_cast<std::size_t>(r) + 1, false);
    for (const auto& cyc : cycles) {
      for (std::size_t s = 0; s < cyc.size(); ++s) {
        const int from = cyc[s];
        if (used[static_cast<std::size_t>(from)]) fail(ErrorCode::kParse, "cycles are not disjoint");
        used[static_cast<std::size_t>(from)] = true;
        images[static_cast<std::size_t>(from - 1)] = cyc[(s + 1) % cyc.size()];
      }
    }
    return Permutation(std::move(images));
  }

  if (text.front() == '[') {
    if (text.back() != ']') fail(ErrorCode::kParse, "unbalanced '['");
    text = text.substr(1, text.size() - 2);
  }
  auto values = read_integers(text, "one-line permutation");
  if (values.empty()) fail(ErrorCode::kParse, "empty permutation");
  std::vector<bool> seen(values.size() + 1, false);
  for (int v : values) {
    if (v < 1 || v > static_cast<int>(values.size()) || seen[static_cast<std::size_t>(v)]) {
      fail(ErrorCode::kParse, "one-line list is not a permutation");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
  return Permutation(std::move(values));
}

Bt1Datum::Bt1Datum(int c, int d, Permutation pi) : c_(c), d_(d), pi_(std::move(pi)) {
  if (c < 1 || d < 1) fail(ErrorCode::kInvalidDatum, "c and d must be positive");
  if (pi_.size() != c + d) {
    fail(ErrorCode::kInvalidDatum, "permutation has degree " + std::to_string(pi_.size()) +
                                       " but c + d = " + std::to_string(c + d));
  }
}

std::vector<Permutation> all_permutations(int r) {
  std::vector<Permutation> out;
  Permutation pi = Permutation::identity(r);
  do {
    out.push_back(pi);
  } while (pi.next());
  return out;
}

}  // namespace bt1
