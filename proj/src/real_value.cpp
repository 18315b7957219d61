#include "threedist/real_value.hpp"

#include <array>
#include <utility>

#include "threedist/errors.hpp"

namespace threedist {

namespace {

constexpr int kMinBits = 8;
constexpr int kMaxBits = 1 << 16;

constexpr std::array<std::string_view, 3> kConstantNames = {"phi_frac", "sqrt2_frac",
                                                            "log2_3_frac"};

BigInt pow2(unsigned k) { return BigInt(1) << k; }

// (sqrt(5) - 1) / 2 from the integer square root of 5 * 4^k.
std::pair<Rational, Rational> phi_frac_enclosure(int bits) {
  const auto k = static_cast<unsigned>(bits + 2);
  BigInt root = boost::multiprecision::sqrt(BigInt(5) * pow2(2 * k));
  // root <= sqrt(5) 2^k < root + 1
  Rational approx(2 * root + 1 - pow2(k + 1), pow2(k + 2));
  Rational err(1, pow2(k + 2));
  return {approx, err};
}

std::pair<Rational, Rational> sqrt2_frac_enclosure(int bits) {
  const auto k = static_cast<unsigned>(bits + 2);
  BigInt root = boost::multiprecision::sqrt(BigInt(2) * pow2(2 * k));
  Rational approx(2 * root + 1 - pow2(k + 1), pow2(k + 1));
  Rational err(1, pow2(k + 1));
  return {approx, err};
}

// Bounds on atanh(1/m) * 2^p as integers [lo, hi], from the series
// sum 1 / ((2k+1) m^(2k+1)) with floor-rounded terms and a geometric tail.
std::pair<BigInt, BigInt> atanh_inverse_fixed(unsigned m, unsigned p) {
  const BigInt scale = pow2(p);
  const BigInt m_sq = BigInt(m) * m;
  BigInt power = m;  // m^(2k+1)
  BigInt sum = 0;
  unsigned terms = 0;
  for (unsigned k = 0; power <= scale; ++k) {
    sum += scale / (power * (2 * k + 1));
    power *= m_sq;
    ++terms;
  }
  // Remaining terms: < 1 / ((2K+1) m^(2K+1) (1 - 1/m^2)) <= 2 / m^(2K+1) < 2 ulp.
  BigInt hi = sum + terms + 2;
  return {sum, hi};
}

std::pair<Rational, Rational> log2_3_frac_enclosure(int bits) {
  // log2(3) - 1 = ln(3/2) / ln(2) = atanh(1/5) / atanh(1/3)
  const Rational target_err(1, pow2(static_cast<unsigned>(bits)));
  for (unsigned guard = 32;; guard *= 2) {
    const unsigned p = static_cast<unsigned>(bits) + guard;
    auto [num_lo, num_hi] = atanh_inverse_fixed(5, p);
    auto [den_lo, den_hi] = atanh_inverse_fixed(3, p);
    Rational lo(num_lo, den_hi);
    Rational hi(num_hi, den_lo);
    Rational mid = (lo + hi) / Rational(2);
    const unsigned grid = static_cast<unsigned>(bits) + 4;
    // Round the midpoint onto a dyadic grid to keep denominators small.
    BigInt scaled = (mid * Rational(pow2(grid))).floor();
    Rational approx(scaled, pow2(grid));
    Rational spread = std::max(hi - approx, approx - lo);
    // Round the error bound up onto a finer dyadic grid.
    const unsigned err_grid = grid + 4;
    BigInt err_scaled = (spread * Rational(pow2(err_grid))).floor() + 1;
    Rational err(err_scaled, pow2(err_grid));
    if (err <= target_err) return {approx, err};
  }
}

}  // namespace

std::string_view origin_name(Origin origin) {
  switch (origin) {
    case Origin::kExactRational: return "exact-rational";
    case Origin::kDecimalLiteral: return "decimal-literal";
    case Origin::kNamedConstant: return "named-constant";
  }
  return "unknown";
}

bool is_named_constant(std::string_view name) {
  for (auto known : kConstantNames) {
    if (known == name) return true;
  }
  return false;
}

RealValue::RealValue(Rational approx, Rational err, Origin origin, std::string constant,
                     int bits)
    : approx_(std::move(approx)),
      err_(std::move(err)),
      origin_(origin),
      constant_(std::move(constant)),
      bits_(bits) {}

RealValue RealValue::from_parts(Rational approx, Rational err, Origin origin,
                                std::string constant, int bits) {
  if (err.sign() < 0) throw InvalidArgument("negative error bound");
  const bool should_be_exact = origin != Origin::kNamedConstant;
  if (should_be_exact != err.is_zero()) {
    throw InvalidArgument("error bound must be zero exactly for exact origins");
  }
  if (approx - err <= Rational(0) || approx + err >= Rational(1)) {
    throw AlphaOutOfRange("enclosure " + approx.to_string() + " +/- " + err.to_string() +
                          " is not inside (0, 1)");
  }
  if (origin == Origin::kNamedConstant && !is_named_constant(constant)) {
    throw InvalidArgument("unknown named constant '" + constant + "'");
  }
  if (origin != Origin::kNamedConstant) {
    constant.clear();
    bits = 0;
  }
  return RealValue(std::move(approx), std::move(err), origin, std::move(constant), bits);
}

RealValue RealValue::exact(const Rational& value, Origin origin) {
  Rational reduced = value.frac();
  if (reduced.is_zero()) {
    throw AlphaOutOfRange(value.to_string() + " is an integer; alpha must be nonzero mod 1");
  }
  return from_parts(std::move(reduced), Rational(0), origin);
}

RealValue RealValue::named(std::string_view name, int bits) {
  if (bits < kMinBits || bits > kMaxBits) {
    throw InvalidArgument("precision must be between " + std::to_string(kMinBits) + " and " +
                          std::to_string(kMaxBits) + " bits");
  }
  std::pair<Rational, Rational> enclosure;
  if (name == "phi_frac") {
    enclosure = phi_frac_enclosure(bits);
  } else if (name == "sqrt2_frac") {
    enclosure = sqrt2_frac_enclosure(bits);
  } else if (name == "log2_3_frac") {
    enclosure = log2_3_frac_enclosure(bits);
  } else {
    throw ParseError("unknown named constant '" + std::string(name) + "'");
  }
  return from_parts(std::move(enclosure.first), std::move(enclosure.second),
                    Origin::kNamedConstant, std::string(name), bits);
}

std::optional<std::strong_ordering> RealValue::compare(const Rational& x) const {
  if (is_exact()) return approx_ <=> x;
  if (upper() < x) return std::strong_ordering::less;
  if (lower() > x) return std::strong_ordering::greater;
  return std::nullopt;
}

std::strong_ordering RealValue::compare_or_throw(const Rational& x) const {
  auto order = compare(x);
  if (!order) {
    throw PrecisionInsufficient("cannot order " + describe() + " against " + x.to_string() +
                                "; supply more precision");
  }
  return *order;
}

std::string RealValue::describe() const {
  if (origin_ == Origin::kNamedConstant) {
    return constant_ + "@" + std::to_string(bits_) + "bits";
  }
  return approx_.to_string();
}

RealValue real_value(std::string_view text, int bits) {
  if (text.empty()) throw ParseError("empty value");
  if (is_named_constant(text)) return RealValue::named(text, bits);
  if (text.find('/') != std::string_view::npos) {
    return RealValue::exact(Rational::parse(text), Origin::kExactRational);
  }
  if (text.find('.') != std::string_view::npos) {
    return RealValue::exact(Rational::parse_decimal(text), Origin::kDecimalLiteral);
  }
  char first = text.front();
  if ((first >= '0' && first <= '9') || first == '-' || first == '+') {
    return RealValue::exact(Rational::parse(text), Origin::kExactRational);
  }
  throw ParseError("unrecognized value '" + std::string(text) + "'");
}

Rational parse_unit_ratio(std::string_view text) {
  if (text.empty()) throw ParseError("empty ratio");
  Rational value = text.find('/') != std::string_view::npos ? Rational::parse(text)
                                                             : Rational::parse_decimal(text);
  if (value <= Rational(0) || value >= Rational(1)) {
    throw InvalidArgument("ratio " + value.to_string() + " must lie in (0, 1)");
  }
  return value;
}

}  // namespace threedist
