// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace bt1 {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

/// "num/den" (den always printed).
inline std::string to_string(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace bt1
