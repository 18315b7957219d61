#include "threedist/temperament.hpp"

#include <algorithm>

#include "threedist/errors.hpp"

namespace threedist {

std::vector<std::int64_t> two_length_orders(const RealValue& alpha, std::int64_t n_max) {
  if (n_max < 1) throw InvalidArgument("n_max must be positive");
  if (n_max > kMaxTwoLengthScan) throw SizeLimitExceeded("n_max too large");
  std::vector<std::int64_t> out;
  std::int64_t a = 0, b = 1, c = 1, d = 1;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    if (b + d == n) {
      const Rational med(a + c, b + d);
      const auto order = alpha.compare_or_throw(med);
      // alpha is in F_n; every larger order sees one uniform length.
      if (order == std::strong_ordering::equal) break;
      if (order == std::strong_ordering::greater) {
        a += c;
        b += d;
      } else {
        c += a;
        d += b;
      }
    }
    const bool three_classes = b + d > n + 1;
    const bool s_equals_t =
        alpha.compare_or_throw(Rational(a + c, b + d)) == std::strong_ordering::equal;
    const int distinct = three_classes ? (s_equals_t ? 2 : 3) : (s_equals_t ? 1 : 2);
    if (distinct == 2) out.push_back(n);
  }
  return out;
}

TemperamentReport temperament_report(const RealValue& generator,
                                     const std::vector<std::int64_t>& note_counts) {
  if (note_counts.empty()) throw InvalidArgument("no note counts requested");
  TemperamentReport report{generator, {}, {}, {}};
  for (std::int64_t notes : note_counts) {
    if (notes < 2) throw InvalidArgument("note counts must be at least 2");
    DistancePartition partition = decompose(generator, notes - 1);
    TemperamentRow row{notes, partition, {}, interval_sequence(partition),
                       length_census(partition), distinct_length_count(partition) == 2};
    for (const auto& entry : row.intervals) row.ranks_in_position_order.push_back(entry.index);
    report.rows.push_back(std::move(row));
  }
  const BigInt limit = *std::max_element(note_counts.begin(), note_counts.end());
  const auto quotients = continued_fraction(generator.approx());
  for (const auto& c : convergents(quotients)) {
    if (c.den() > limit) break;
    report.convergent_denominators.push_back(c.den());
  }
  for (const auto& c : semiconvergents(quotients, limit)) {
    report.semiconvergent_denominators.push_back(c.den());
  }
  return report;
}

}  // namespace threedist
