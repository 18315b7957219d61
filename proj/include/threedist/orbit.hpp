#pragma once

#include <compare>
#include <cstdint>

#include "threedist/rational.hpp"
#include "threedist/real_value.hpp"

namespace threedist {

// Walks the rotation orbit {i alpha}, i = 0, 1, 2, ... keeping the position
// as the integer residue i*P mod Q of alpha.approx() = P/Q, and the error
// radius as i * alpha.err().
class OrbitWalker {
 public:
  explicit OrbitWalker(const RealValue& alpha);

  std::int64_t index() const { return index_; }
  void advance();
  void seek(std::int64_t index);

  // Approximate position residue/Q; exact when alpha is exact.
  Rational position() const { return Rational(residue_, den_); }
  // True when alpha is exact and {i alpha} = 0 for the current i > 0.
  bool closed() const { return exact_ && index_ > 0 && residue_ == 0; }

  // Order of the true {i alpha} against x in (0, 1]. Throws
  // PrecisionInsufficient when the enclosure straddles x or an integer.
  std::strong_ordering compare(const Rational& x) const;

 private:
  BigInt num_;
  BigInt den_;
  Rational err_;
  bool exact_;
  std::int64_t index_ = 0;
  BigInt residue_ = 0;
};

}  // namespace threedist
