#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "threedist/farey.hpp"
#include "threedist/length_census.hpp"
#include "threedist/real_value.hpp"
#include "threedist/three_distance.hpp"

namespace threedist {

inline constexpr std::int64_t kMaxTwoLengthScan = 10'000'000;

// All n in [1, n_max] at which the points {i alpha}, 0 <= i <= n, cut the
// circle into exactly two distinct lengths. Walks the Farey pair of order
// n incrementally: the pair changes exactly when its mediant enters F_n.
std::vector<std::int64_t> two_length_orders(const RealValue& alpha, std::int64_t n_max);

struct TemperamentRow {
  std::int64_t notes = 0;
  DistancePartition partition;
  std::vector<std::int64_t> ranks_in_position_order;
  std::vector<IntervalEntry> intervals;
  LengthCensus lengths;
  bool two_length = false;
};

struct TemperamentReport {
  RealValue generator;
  std::vector<TemperamentRow> rows;
  // Convergent and intermediate-fraction denominators of the generator up
  // to the largest requested note count.
  std::vector<BigInt> convergent_denominators;
  std::vector<BigInt> semiconvergent_denominators;
};

TemperamentReport temperament_report(const RealValue& generator,
                                     const std::vector<std::int64_t>& note_counts);

}  // namespace threedist
