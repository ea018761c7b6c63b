// SPDX-License-Identifier: Apache-2.0
#include "bt1/kraft.hpp"

#include <algorithm>

#include "bt1/errors.hpp"
#include "json.hpp"

namespace bt1 {

std::string least_rotation(std::string_view word) {
  std::string best(word);
  std::string doubled = std::string(word) + std::string(word);
  for (std::size_t s = 1; s < word.size(); ++s) {
    std::string_view candidate(doubled.data() + s, word.size());
    if (candidate < best) best.assign(candidate);
  }
  return best;
}

std::string primitive_root(std::string_view word) {
  const std::size_t n = word.size();
  for (std::size_t len = 1; len <= n; ++len) {
    if (n % len) continue;
    bool periodic = true;
    for (std::size_t k = len; k < n && periodic; ++k) periodic = word[k] == word[k - len];
    if (periodic) return std::string(word.substr(0, len));
  }
  return std::string(word);
}

KraftInvariant KraftInvariant::from_words(const std::vector<std::string>& words) {
  KraftInvariant inv;
  for (const auto& word : words) {
    if (word.empty()) fail(ErrorCode::kParse, "empty cyclic word");
    for (char ch : word) {
      if (ch == 'F') {
        ++inv.c_;
      } else if (ch == 'V') {
        ++inv.d_;
      } else {
        fail(ErrorCode::kParse, "cyclic words use only the letters F and V");
      }
    }
    const std::string root = least_rotation(primitive_root(word));
    for (std::size_t k = 0; k < word.size() / root.size(); ++k) inv.words_.push_back(root);
  }
  std::sort(inv.words_.begin(), inv.words_.end());
  return inv;
}

KraftInvariant KraftInvariant::parse(std::string_view key) {
  nlohmann::json parsed;
  try {
    parsed = nlohmann::json::parse(key);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::kParse, std::string("invalid class key: ") + e.what());
  }
  if (!parsed.is_array()) fail(ErrorCode::kParse, "class key must be a JSON list of words");
  std::vector<std::string> words;
  for (const auto& w : parsed) {
    if (!w.is_string()) fail(ErrorCode::kParse, "class key entries must be strings");
    words.push_back(w.get<std::string>());
  }
  return from_words(words);
}

std::size_t KraftInvariant::multiplicity(std::string_view word) const {
  return static_cast<std::size_t>(std::count(words_.begin(), words_.end(), word));
}

std::string KraftInvariant::key() const { return nlohmann::json(words_).dump(); }

KraftInvariant kraft_invariant(const Bt1Datum& datum) {
  std::vector<std::string> words;
  for (const auto& cyc : datum.pi().cycles()) {
    std::string word;
    word.reserve(cyc.size());
    for (int i : cyc) word.push_back(datum.is_f_index(i) ? 'F' : 'V');
    words.push_back(std::move(word));
  }
  return KraftInvariant::from_words(words);
}

KraftInvariant dual(const KraftInvariant& inv) {
  std::vector<std::string> words;
  for (const auto& word : inv.words()) {
    std::string w(word.rbegin(), word.rend());
    for (char& ch : w) ch = ch == 'F' ? 'V' : 'F';
    words.push_back(std::move(w));
  }
  return KraftInvariant::from_words(words);
}

Bt1Datum representative(const KraftInvariant& inv) {
  const int c = inv.c();
  const int r = inv.r();
  std::vector<int> images(static_cast<std::size_t>(r), 0);
  int next_f = 1;
  int next_v = c + 1;
  for (const auto& word : inv.words()) {
    std::vector<int> cyc;
    for (char ch : word) cyc.push_back(ch == 'F' ? next_f++ : next_v++);
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      images[static_cast<std::size_t>(cyc[k] - 1)] = cyc[(k + 1) % cyc.size()];
    }
  }
  return Bt1Datum(c, inv.d(), Permutation(std::move(images)));
}

ClassIndex::ClassIndex(int c, int d, int max_r) : c_(c), d_(d) {
  if (c < 1 || d < 1) fail(ErrorCode::kInvalidDatum, "c and d must be positive");
  if (c + d > max_r) {
    fail(ErrorCode::kRTooLarge, "r = " + std::to_string(c + d) + " exceeds the enumeration bound " +
                                    std::to_string(max_r));
  }
  Permutation pi = Permutation::identity(c + d);
  do {
    classes_[kraft_invariant(Bt1Datum(c, d, pi))].push_back(pi);
  } while (pi.next());
}

const std::vector<Permutation>& ClassIndex::members(const KraftInvariant& inv) const {
  auto it = classes_.find(inv);
  if (it == classes_.end()) fail(ErrorCode::kInvalidDatum, "class " + inv.key() + " not in index");
  return it->second;
}

std::size_t class_count(int c, int d, int max_r) { return ClassIndex(c, d, max_r).classes().size(); }

}  // namespace bt1
