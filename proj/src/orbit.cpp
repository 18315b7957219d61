#include "threedist/orbit.hpp"

#include "threedist/errors.hpp"

namespace threedist {

OrbitWalker::OrbitWalker(const RealValue& alpha)
    : num_(alpha.approx().num()),
      den_(alpha.approx().den()),
      err_(alpha.err()),
      exact_(alpha.is_exact()) {}

void OrbitWalker::advance() {
  ++index_;
  residue_ += num_;
  if (residue_ >= den_) residue_ -= den_;
}

void OrbitWalker::seek(std::int64_t index) {
  if (index < 0) throw IndexOutOfRange("negative orbit index");
  index_ = index;
  residue_ = (BigInt(index) * num_) % den_;
}

std::strong_ordering OrbitWalker::compare(const Rational& x) const {
  // residue/den vs x.num/x.den, by cross multiplication.
  if (exact_ || index_ == 0) {
    return (residue_ * x.den()).compare(x.num() * den_) <=> 0;
  }
  const Rational pos = position();
  const Rational radius = Rational(index_) * err_;
  const Rational lo = pos - radius;
  const Rational hi = pos + radius;
  if (lo.sign() <= 0 || hi >= Rational(1)) {
    throw PrecisionInsufficient("fractional part of " + std::to_string(index_) +
                                " alpha is too close to an integer for the given precision");
  }
  if (hi < x) return std::strong_ordering::less;
  if (lo > x) return std::strong_ordering::greater;
  throw PrecisionInsufficient("cannot order the fractional part of " + std::to_string(index_) +
                              " alpha against " + x.to_string());
}

}  // namespace threedist
