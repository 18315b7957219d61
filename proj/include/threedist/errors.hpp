#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace threedist {

enum class ErrorKind {
  kParseError,
  kInvalidArgument,
  kAlphaOutOfRange,
  kPrecisionInsufficient,
  kIndexOutOfRange,
  kSizeLimitExceeded,
  kGapSearchCapExceeded,
  kRationalAlphaDegenerate,
  kNotAHit,
  kApproximateInputRefused,
};

std::string_view error_kind_name(ErrorKind kind);

// Base of every typed failure raised by the library. kind() is what the CLI
// reports and maps onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view kind_name() const { return error_kind_name(kind_); }

 private:
  ErrorKind kind_;
};

template <ErrorKind K>
class TypedError : public Error {
 public:
  explicit TypedError(const std::string& message) : Error(K, message) {}
};

using ParseError = TypedError<ErrorKind::kParseError>;
using InvalidArgument = TypedError<ErrorKind::kInvalidArgument>;
using AlphaOutOfRange = TypedError<ErrorKind::kAlphaOutOfRange>;
using PrecisionInsufficient = TypedError<ErrorKind::kPrecisionInsufficient>;
using IndexOutOfRange = TypedError<ErrorKind::kIndexOutOfRange>;
using SizeLimitExceeded = TypedError<ErrorKind::kSizeLimitExceeded>;
using GapSearchCapExceeded = TypedError<ErrorKind::kGapSearchCapExceeded>;
using RationalAlphaDegenerate = TypedError<ErrorKind::kRationalAlphaDegenerate>;
using NotAHit = TypedError<ErrorKind::kNotAHit>;
using ApproximateInputRefused = TypedError<ErrorKind::kApproximateInputRefused>;

}  // namespace threedist
