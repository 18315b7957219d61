#pragma once

#include <cstdint>
#include <random>

#include "threedist/farey.hpp"
#include "threedist/rational.hpp"
#include "threedist/real_value.hpp"

namespace threedist::testing {

inline std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

// Reduced p/q in (0, 1) with the given denominator.
inline Rational random_with_denominator(std::mt19937_64& rng, std::int64_t q) {
  for (;;) {
    std::int64_t p = uniform_int(rng, 1, q - 1);
    Rational r(p, q);
    if (r.den() == q) return r;
  }
}

// First convergent of the named constant with denominator above min_den.
inline Rational convergent_above(std::string_view name, const BigInt& min_den, int bits = 256) {
  RealValue v = RealValue::named(name, bits);
  for (const auto& c : convergents(continued_fraction(v.approx()))) {
    if (c.den() > min_den) return c;
  }
  return v.approx();
}

// {i x} by direct rational arithmetic.
inline Rational frac_multiple(std::int64_t i, const Rational& x) { return (Rational(i) * x).frac(); }

}  // namespace threedist::testing
