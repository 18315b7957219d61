#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace threedist {

using BigInt =
    boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                  boost::multiprecision::et_off>;

// Exact fraction num/den with den > 0 and gcd(|num|, den) = 1. Every
// constructor and arithmetic operator returns a reduced value.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  template <std::integral I>
  Rational(I value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(BigInt value) : num_(std::move(value)), den_(1) {}  // NOLINT
  Rational(BigInt num, BigInt den);

  // Accepts "p/q" or a bare integer "p".
  static Rational parse(std::string_view text);
  // Accepts a finite decimal literal such as "0.585", "-1.25" or "3".
  static Rational parse_decimal(std::string_view text);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_.sign(); }

  BigInt floor() const;
  Rational frac() const;
  Rational abs() const;

  // "p/q", always with an explicit denominator ("2/1" for two).
  std::string to_string() const;
  // Fixed-point rendering, rounded half away from zero.
  std::string to_fixed(int places) const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  friend Rational operator-(const Rational& value);

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

 private:
  struct Reduced {};
  Rational(BigInt num, BigInt den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  BigInt num_;
  BigInt den_;
};

std::string to_string(const BigInt& value);
BigInt parse_bigint(std::string_view text);

// Narrowing conversion for values known to fit; throws SizeLimitExceeded otherwise.
std::int64_t to_int64(const BigInt& value);

}  // namespace threedist
