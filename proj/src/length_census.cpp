#include "threedist/length_census.hpp"

#include "threedist/errors.hpp"

namespace threedist {

void LengthCensus::add(const Rational& length, std::int64_t multiplicity) {
  if (multiplicity <= 0) return;
  if (length.sign() <= 0) throw InvalidArgument("interval lengths must be positive");
  entries_[length] += multiplicity;
}

std::int64_t LengthCensus::intervals() const {
  std::int64_t total = 0;
  for (const auto& [length, count] : entries_) total += count;
  return total;
}

Rational LengthCensus::total() const {
  Rational sum;
  for (const auto& [length, count] : entries_) sum += length * Rational(count);
  return sum;
}

}  // namespace threedist
