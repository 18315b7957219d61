#include "threedist/oracle.hpp"

#include <algorithm>

#include "threedist/errors.hpp"
#include "threedist/farey.hpp"

namespace threedist::oracle {

LengthCensus brute_lengths(const Rational& alpha, std::int64_t n) {
  if (n < 1) throw InvalidArgument("n must be positive");
  if (alpha <= Rational(0) || alpha >= Rational(1)) throw AlphaOutOfRange("alpha outside (0, 1)");
  std::vector<Rational> points;
  points.reserve(static_cast<std::size_t>(n + 1));
  for (std::int64_t i = 0; i <= n; ++i) points.push_back((Rational(i) * alpha).frac());
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  LengthCensus census;
  for (std::size_t k = 0; k + 1 < points.size(); ++k) census.add(points[k + 1] - points[k]);
  census.add(Rational(1) - points.back());
  return census;
}

LengthCensus brute_lengths(const RealValue& alpha, std::int64_t n) {
  if (!alpha.is_exact()) {
    throw ApproximateInputRefused("the oracle needs an exact alpha, got " + alpha.describe());
  }
  return brute_lengths(alpha.approx(), n);
}

BruteGaps brute_gaps(const Rational& alpha, const Rational& beta, std::int64_t n_indices) {
  if (alpha <= Rational(0) || alpha >= Rational(1)) throw AlphaOutOfRange("alpha outside (0, 1)");
  BruteGaps out;
  for (std::int64_t i = 0; i < n_indices; ++i) {
    Rational point = (Rational(i) * alpha).frac();
    if (i > 0 && point.is_zero()) {
      throw RationalAlphaDegenerate("orbit closes at index " + std::to_string(i));
    }
    if (point < beta) out.hits.push_back(i);
  }
  for (std::size_t k = 1; k < out.hits.size(); ++k) {
    std::int64_t gap = out.hits[k] - out.hits[k - 1];
    out.gaps.push_back(gap);
    ++out.counts[gap];
  }
  return out;
}

BruteGaps brute_gaps(const RealValue& alpha, const Rational& beta, std::int64_t n_indices) {
  if (!alpha.is_exact()) {
    throw ApproximateInputRefused("the oracle needs an exact alpha, got " + alpha.describe());
  }
  return brute_gaps(alpha.approx(), beta, n_indices);
}

Rational exact_proxy(const RealValue& alpha, std::int64_t min_denominator) {
  if (alpha.is_exact()) return alpha.approx();
  for (const Rational& c : convergents(continued_fraction(alpha.approx()))) {
    if (c.den() > min_denominator && alpha.compare(c) == std::nullopt) return c;
  }
  throw PrecisionInsufficient("no convergent beyond denominator " +
                              std::to_string(min_denominator) + " inside the enclosure of " +
                              alpha.describe());
}

}  // namespace threedist::oracle
