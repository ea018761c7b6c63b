// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bt1 {

enum class ErrorCode {
  kParse,            // malformed textual input
  kInvalidDatum,     // c, d, or pi violate the datum constraints
  kNotMinusPair,
  kPathExplosion,
  kRTooLarge,
  kNotBt1,
  kNotStabilized,
  kDimensionCeiling,
  kInternal,
};

std::string_view to_string(ErrorCode code);

// Exit status used by the command-line tool for an error of this kind.
int exit_code(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

}  // namespace bt1
