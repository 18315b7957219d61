#include "threedist/errors.hpp"

namespace threedist {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParseError: return "ParseError";
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kAlphaOutOfRange: return "AlphaOutOfRange";
    case ErrorKind::kPrecisionInsufficient: return "PrecisionInsufficient";
    case ErrorKind::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::kSizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorKind::kGapSearchCapExceeded: return "GapSearchCapExceeded";
    case ErrorKind::kRationalAlphaDegenerate: return "RationalAlphaDegenerate";
    case ErrorKind::kNotAHit: return "NotAHit";
    case ErrorKind::kApproximateInputRefused: return "ApproximateInputRefused";
  }
  return "Error";
}

}  // namespace threedist
