// SPDX-License-Identifier: Apache-2.0
#include "bt1/errors.hpp"

namespace bt1 {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kInvalidDatum: return "InvalidDatum";
    case ErrorCode::kNotMinusPair: return "NotMinusPair";
    case ErrorCode::kPathExplosion: return "PathExplosion";
    case ErrorCode::kRTooLarge: return "RTooLarge";
    case ErrorCode::kNotBt1: return "NotBT1";
    case ErrorCode::kNotStabilized: return "NotStabilized";
    case ErrorCode::kDimensionCeiling: return "DimensionCeiling";
    case ErrorCode::kInternal: return "InternalError";
  }
  return "UnknownError";
}

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return 2;
    case ErrorCode::kInvalidDatum:
    case ErrorCode::kNotMinusPair:
    case ErrorCode::kNotBt1: return 3;
    case ErrorCode::kPathExplosion:
    case ErrorCode::kRTooLarge:
    case ErrorCode::kDimensionCeiling: return 4;
    case ErrorCode::kNotStabilized:
    case ErrorCode::kInternal: return 5;
  }
  return 5;
}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace bt1
