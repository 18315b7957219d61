#pragma once

#include <cstdint>
#include <map>

#include "threedist/rational.hpp"

namespace threedist {

// Multiset of interval lengths: length -> multiplicity, lengths distinct.
class LengthCensus {
 public:
  void add(const Rational& length, std::int64_t multiplicity = 1);

  const std::map<Rational, std::int64_t>& entries() const { return entries_; }
  std::size_t distinct() const { return entries_.size(); }
  std::int64_t intervals() const;
  Rational total() const;

  friend bool operator==(const LengthCensus&, const LengthCensus&) = default;

 private:
  std::map<Rational, std::int64_t> entries_;
};

}  // namespace threedist
