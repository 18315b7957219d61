#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include "threedist/rational.hpp"

namespace threedist {

enum class Origin { kExactRational, kDecimalLiteral, kNamedConstant };

std::string_view origin_name(Origin origin);

inline constexpr int kDefaultPrecisionBits = 128;

// A number in (0, 1) known as approx +/- err. Exact inputs carry err = 0;
// named constants carry a rigorous bound err <= 2^-bits. The whole
// enclosure [approx - err, approx + err] lies strictly inside (0, 1).
class RealValue {
 public:
  // Reduces value modulo 1. Throws AlphaOutOfRange when the result is 0.
  static RealValue exact(const Rational& value, Origin origin = Origin::kExactRational);
  static RealValue named(std::string_view name, int bits = kDefaultPrecisionBits);
  // Low-level constructor used by deserialization; validates every invariant.
  static RealValue from_parts(Rational approx, Rational err, Origin origin,
                              std::string constant = {}, int bits = 0);

  const Rational& approx() const { return approx_; }
  const Rational& err() const { return err_; }
  Origin origin() const { return origin_; }
  // Empty unless origin() is kNamedConstant.
  const std::string& constant() const { return constant_; }
  int bits() const { return bits_; }

  bool is_exact() const { return err_.is_zero(); }
  Rational lower() const { return approx_ - err_; }
  Rational upper() const { return approx_ + err_; }

  // Three-way comparison of the true value against x. Empty when x lies in
  // the enclosure and the value is not exact, i.e. the order is undecided.
  std::optional<std::strong_ordering> compare(const Rational& x) const;
  // Same as compare() but throws PrecisionInsufficient when undecided.
  std::strong_ordering compare_or_throw(const Rational& x) const;

  std::string describe() const;

 private:
  RealValue(Rational approx, Rational err, Origin origin, std::string constant, int bits);

  Rational approx_;
  Rational err_;
  Origin origin_;
  std::string constant_;
  int bits_ = 0;
};

// Parses "p/q", a decimal literal, or one of the named constants phi_frac,
// sqrt2_frac, log2_3_frac (evaluated at `bits` of precision).
RealValue real_value(std::string_view text, int bits = kDefaultPrecisionBits);

// Parses a ratio in the open interval (0, 1) given as "p/q" or a decimal.
// No reduction modulo 1 is applied.
Rational parse_unit_ratio(std::string_view text);

bool is_named_constant(std::string_view name);

}  // namespace threedist
