#include "threedist/rational.hpp"

#include <limits>

#include "threedist/errors.hpp"

namespace threedist {

namespace {

bool all_digits(std::string_view text) {
  if (text.empty()) return false;
  for (char ch : text) {
    if (ch < '0' || ch > '9') return false;
  }
  return true;
}

// Caller has checked the characters. Leading zeros are dropped because the
// string constructor would otherwise read octal.
BigInt from_digits(std::string_view digits) {
  auto first = digits.find_first_not_of('0');
  if (first == std::string_view::npos) return BigInt(0);
  return BigInt{std::string(digits.substr(first))};
}

}  // namespace

BigInt parse_bigint(std::string_view text) {
  bool negative = false;
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (!all_digits(digits)) {
    throw ParseError("not an integer: '" + std::string(text) + "'");
  }
  BigInt value = from_digits(digits);
  return negative ? BigInt(-value) : value;
}

std::string to_string(const BigInt& value) { return value.str(); }

std::int64_t to_int64(const BigInt& value) {
  if (value > std::numeric_limits<std::int64_t>::max() ||
      value < std::numeric_limits<std::int64_t>::min()) {
    throw SizeLimitExceeded("integer does not fit in 64 bits: " + value.str());
  }
  return static_cast<std::int64_t>(value);
}

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw InvalidArgument("zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  BigInt g = boost::multiprecision::gcd(num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_bigint(text));
  BigInt num = parse_bigint(text.substr(0, slash));
  std::string_view den_text = text.substr(slash + 1);
  if (!all_digits(den_text)) {
    throw ParseError("malformed denominator in '" + std::string(text) + "'");
  }
  BigInt den = from_digits(den_text);
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(std::move(num), std::move(den));
}

Rational Rational::parse_decimal(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto dot = body.find('.');
  std::string_view int_part = body.substr(0, dot);
  std::string_view frac_part =
      dot == std::string_view::npos ? std::string_view{} : body.substr(dot + 1);
  bool int_ok = int_part.empty() || all_digits(int_part);
  bool frac_ok = frac_part.empty() || all_digits(frac_part);
  if (!int_ok || !frac_ok || (int_part.empty() && frac_part.empty())) {
    throw ParseError("malformed decimal literal: '" + std::string(text) + "'");
  }
  std::string digits = std::string(int_part) + std::string(frac_part);
  BigInt num = from_digits(digits);
  BigInt den = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac_part.size()));
  if (negative) num = -num;
  return Rational(std::move(num), std::move(den));
}

BigInt Rational::floor() const {
  BigInt q;
  BigInt r;
  boost::multiprecision::divide_qr(num_, den_, q, r);
  if (r.sign() < 0) --q;
  return q;
}

Rational Rational::frac() const {
  BigInt fl = floor();
  return Rational(num_ - fl * den_, den_, Reduced{});
}

Rational Rational::abs() const {
  return Rational(num_.sign() < 0 ? BigInt(-num_) : num_, den_, Reduced{});
}

std::string Rational::to_string() const { return num_.str() + "/" + den_.str(); }

std::string Rational::to_fixed(int places) const {
  BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(places));
  BigInt magnitude = num_.sign() < 0 ? BigInt(-num_) : num_;
  BigInt q;
  BigInt r;
  boost::multiprecision::divide_qr(magnitude * scale, den_, q, r);
  if (2 * r >= den_) ++q;
  std::string digits = q.str();
  if (digits.size() <= static_cast<std::size_t>(places)) {
    digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
  }
  std::string out;
  if (num_.sign() < 0 && q != 0) out.push_back('-');
  out += digits.substr(0, digits.size() - places);
  if (places > 0) {
    out.push_back('.');
    out += digits.substr(digits.size() - places);
  }
  return out;
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  if (den_ == rhs.den_) {
    num_ -= rhs.num_;
  } else {
    num_ = num_ * rhs.den_ - rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_ == 0) throw InvalidArgument("division by zero");
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  normalize();
  return *this;
}

Rational operator-(const Rational& value) {
  return Rational(-value.num_, value.den_, Rational::Reduced{});
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
  if (lhs.den_ == rhs.den_) return lhs.num_.compare(rhs.num_) <=> 0;
  BigInt left = lhs.num_ * rhs.den_;
  BigInt right = rhs.num_ * lhs.den_;
  return left.compare(right) <=> 0;
}

}  // namespace threedist
