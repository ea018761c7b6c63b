// SPDX-License-Identifier: Apache-2.0
#include "bt1/semilinear.hpp"

#include "bt1/errors.hpp"

namespace bt1 {

SemilinearPair build_pair(const Bt1Datum& datum, int p, int e) {
  auto field = FiniteField::get(p, e);
  const int r = datum.r();
  SemilinearPair pair{FqMatrix(field, r, r), FqMatrix(field, r, r)};
  for (int i = 1; i <= r; ++i) {
    const int image = datum.pi()(i);
    if (datum.is_f_index(i)) {
      pair.f.at(image - 1, i - 1) = 1;
    } else {
      pair.v_twisted.at(i - 1, image - 1) = 1;
    }
  }
  return pair;
}

bool is_bt1(const SemilinearPair& pair) {
  const int r = pair.r();
  if (pair.f.cols() != r || pair.v_twisted.rows() != r || pair.v_twisted.cols() != r) return false;
  if (pair.f.field() != pair.v_twisted.field()) return false;
  if (pair.f.rank() + pair.v_twisted.rank() != r) return false;
  return (pair.v_twisted * pair.f).is_zero() && (pair.f * pair.v_twisted).is_zero();
}

void require_bt1(const SemilinearPair& pair) {
  if (!is_bt1(pair)) fail(ErrorCode::kNotBt1, "pair violates ker F = im V / ker V = im F");
}

int p_rank(const SemilinearPair& pair) {
  require_bt1(pair);
  FqMatrix acc = pair.f;
  for (int k = 1; k < pair.r(); ++k) acc = acc * pair.f.twist(k);
  return acc.rank();
}

int a_number(const SemilinearPair& pair) {
  require_bt1(pair);
  return pair.r() - pair.f.hconcat(pair.v_twisted.twist(-1)).rank();
}

TwistedMap compose(const TwistedMap& x, const TwistedMap& y) {
  return {x.m * y.m.twist(x.twist), x.twist + y.twist};
}

namespace {

void extend(const TwistedMap& current, const std::string& word, int max_length,
            const TwistedMap& f, const TwistedMap& v, std::map<std::string, int>& out) {
  out[word] = current.m.rank();
  if (static_cast<int>(word.size()) == max_length) return;
  extend(compose(f, current), "F" + word, max_length, f, v, out);
  extend(compose(v, current), "V" + word, max_length, f, v, out);
}

}  // namespace

std::map<std::string, int> word_rank_profile(const SemilinearPair& pair, int max_length) {
  require_bt1(pair);
  std::map<std::string, int> out;
  if (max_length < 1) return out;
  const TwistedMap f{pair.f, 1};
  const TwistedMap v{pair.v_twisted.twist(-1), -1};
  extend(f, "F", max_length, f, v, out);
  extend(v, "V", max_length, f, v, out);
  return out;
}

}  // namespace bt1
