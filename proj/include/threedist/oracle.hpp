#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "threedist/length_census.hpp"
#include "threedist/rational.hpp"
#include "threedist/real_value.hpp"

namespace threedist::oracle {

// Sort-and-diff of the points {i alpha}, 0 <= i <= n, computed with plain
// rational arithmetic. Shares no code with decompose().
LengthCensus brute_lengths(const Rational& alpha, std::int64_t n);
// Refuses approximate inputs with ApproximateInputRefused.
LengthCensus brute_lengths(const RealValue& alpha, std::int64_t n);

struct BruteGaps {
  std::vector<std::int64_t> hits;
  std::vector<std::int64_t> gaps;
  std::map<std::int64_t, std::int64_t> counts;
};

// Hits i < n_indices with {i alpha} < beta by direct comparison, and their
// consecutive differences. Throws RationalAlphaDegenerate if {i alpha} = 0
// for some 0 < i < n_indices.
BruteGaps brute_gaps(const Rational& alpha, const Rational& beta, std::int64_t n_indices);
BruteGaps brute_gaps(const RealValue& alpha, const Rational& beta, std::int64_t n_indices);

// Rational with denominator > min_denominator among the convergents of
// alpha.approx(); alpha itself when exact. For a named constant at adequate
// precision this reproduces every partition and gap census up to that horizon.
Rational exact_proxy(const RealValue& alpha, std::int64_t min_denominator);

}  // namespace threedist::oracle
