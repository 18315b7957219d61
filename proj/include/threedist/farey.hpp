#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "threedist/rational.hpp"
#include "threedist/real_value.hpp"

namespace threedist {

inline constexpr std::int64_t kDefaultFareyCap = 10'000;
// Largest order accepted by farey_neighbors; keeps b + k*d inside int64.
inline constexpr std::int64_t kMaxOrder = std::int64_t{1} << 61;

// Consecutive fractions a/b < c/d of F_order. The constructor enforces
// b*c - a*d = 1, b, d <= order and b + d > order.
class FareyPair {
 public:
  FareyPair(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, std::int64_t order);

  std::int64_t a() const { return a_; }
  std::int64_t b() const { return b_; }
  std::int64_t c() const { return c_; }
  std::int64_t d() const { return d_; }
  std::int64_t order() const { return order_; }

  Rational left() const { return Rational(a_, b_); }
  Rational right() const { return Rational(c_, d_); }
  Rational mediant() const { return Rational(a_ + c_, b_ + d_); }

  friend bool operator==(const FareyPair&, const FareyPair&) = default;

 private:
  std::int64_t a_;
  std::int64_t b_;
  std::int64_t c_;
  std::int64_t d_;
  std::int64_t order_;
};

// alpha coincides with p/q in F_n.
struct ExactMember {
  Rational value;
  friend bool operator==(const ExactMember&, const ExactMember&) = default;
};

using FareyLocation = std::variant<FareyPair, ExactMember>;

Rational mediant(const Rational& x, const Rational& y);

// F_n in increasing order. Throws SizeLimitExceeded when n > cap.
std::vector<Rational> farey_sequence(std::int64_t n, std::int64_t cap = kDefaultFareyCap);

// Locates alpha in F_n by Stern-Brocot descent, consuming each run of
// same-side moves with a galloping search. Throws PrecisionInsufficient
// when alpha's enclosure straddles a fraction of denominator <= n.
FareyLocation farey_neighbors(const RealValue& alpha, std::int64_t n);

// [a0; a1, ..., ak] by the Euclidean algorithm; last quotient >= 2 whenever k >= 1.
std::vector<BigInt> continued_fraction(const Rational& x);

// Convergents h_k/k_k for k = 0..len-1, except that a leading 0/1
// (a0 = 0 with further quotients) is omitted.
std::vector<Rational> convergents(const std::vector<BigInt>& quotients);

// Intermediate fractions (h_{k-2} + j h_{k-1}) / (k_{k-2} + j k_{k-1}),
// 1 <= j <= a_k, for k >= 1 in increasing denominator order. Includes the
// convergents themselves (j = a_k). Stops before the first denominator
// above max_denominator when one is given.
std::vector<Rational> semiconvergents(const std::vector<BigInt>& quotients,
                                      const std::optional<BigInt>& max_denominator = {});

}  // namespace threedist
