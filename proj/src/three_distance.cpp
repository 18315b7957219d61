#include "threedist/three_distance.hpp"

#include <string>

#include "threedist/errors.hpp"

namespace threedist {

namespace {

constexpr std::int64_t kMaxSequenceLength = 10'000'000;

// Inverse of p modulo q for coprime p, q with q >= 1.
BigInt inverse_mod(const BigInt& p, const BigInt& q) {
  BigInt old_r = p % q, r = q;
  BigInt old_s = 1, s = 0;
  while (r != 0) {
    BigInt quotient = old_r / r;
    BigInt tmp = old_r - quotient * r;
    old_r = std::move(r);
    r = std::move(tmp);
    tmp = old_s - quotient * s;
    old_s = std::move(s);
    s = std::move(tmp);
  }
  BigInt inv = old_s % q;
  if (inv < 0) inv += q;
  return inv;
}

}  // namespace

std::string_view length_class_name(LengthClass cls) {
  switch (cls) {
    case LengthClass::kS: return "S";
    case LengthClass::kT: return "T";
    case LengthClass::kST: return "ST";
    case LengthClass::kUniform: return "U";
  }
  return "?";
}

GeneralPartition::GeneralPartition(RealValue alpha, FareyPair pair)
    : alpha_(std::move(alpha)), pair_(pair) {
  if (alpha_.compare_or_throw(pair_.left()) != std::strong_ordering::greater ||
      alpha_.compare_or_throw(pair_.right()) != std::strong_ordering::less) {
    throw InvalidArgument("alpha does not lie strictly inside the Farey interval");
  }
  s_ = Rational(pair_.b()) * alpha_.approx() - Rational(pair_.a());
  t_ = Rational(pair_.c()) - Rational(pair_.d()) * alpha_.approx();
}

Rational GeneralPartition::length_err() const {
  return Rational(b() + d()) * alpha_.err();
}

Rational GeneralPartition::length(LengthClass cls) const {
  switch (cls) {
    case LengthClass::kS: return s_;
    case LengthClass::kT: return t_;
    case LengthClass::kST: return st();
    case LengthClass::kUniform: break;
  }
  throw InvalidArgument("uniform class has no length in a general partition");
}

DistancePartition decompose(const RealValue& alpha, std::int64_t n) {
  FareyLocation location = farey_neighbors(alpha, n);
  if (const auto* member = std::get_if<ExactMember>(&location)) {
    return UniformPartition{member->value, n};
  }
  return GeneralPartition(alpha, std::get<FareyPair>(location));
}

Successor successor(const GeneralPartition& partition, std::int64_t i) {
  const std::int64_t n = partition.n();
  const std::int64_t b = partition.b();
  const std::int64_t d = partition.d();
  if (i < 0 || i > n) {
    throw IndexOutOfRange("index " + std::to_string(i) + " outside [0, " + std::to_string(n) +
                          "]");
  }
  if (i <= n - b) return {i + b, LengthClass::kS};
  if (i >= d) return {i - d, LengthClass::kT};
  return {i + b - d, LengthClass::kST};
}

std::vector<IntervalEntry> interval_sequence(const DistancePartition& partition) {
  std::vector<IntervalEntry> out;
  if (const auto* uniform = std::get_if<UniformPartition>(&partition)) {
    const BigInt& p = uniform->alpha.num();
    const BigInt& q = uniform->alpha.den();
    if (q > kMaxSequenceLength) throw SizeLimitExceeded("interval sequence too long");
    const BigInt inv = inverse_mod(p, q);
    const Rational length = uniform->length();
    for (BigInt k = 0; k < q; ++k) {
      out.push_back({to_int64((k * inv) % q), LengthClass::kUniform, length});
    }
    return out;
  }
  const auto& general = std::get<GeneralPartition>(partition);
  if (general.n() >= kMaxSequenceLength) throw SizeLimitExceeded("interval sequence too long");
  out.reserve(static_cast<std::size_t>(general.n() + 1));
  std::int64_t index = 0;
  do {
    Successor next = successor(general, index);
    out.push_back({index, next.cls, general.length(next.cls)});
    index = next.index;
  } while (index != 0);
  return out;
}

std::vector<IntervalEntry> interval_sequence(const RealValue& alpha, std::int64_t n) {
  return interval_sequence(decompose(alpha, n));
}

IndexBounds index_bounds(const GeneralPartition& partition) {
  const std::int64_t n = partition.n();
  return {n >= std::max(partition.b(), partition.d()), n + 1 <= partition.b() + partition.d()};
}

int distinct_length_count(const DistancePartition& partition) {
  const auto* general = std::get_if<GeneralPartition>(&partition);
  if (general == nullptr) return 1;
  // s = t exactly when alpha is the mediant of its Farey pair.
  const bool s_equals_t =
      general->alpha().compare_or_throw(general->pair().mediant()) == std::strong_ordering::equal;
  if (general->count_st() > 0) return s_equals_t ? 2 : 3;
  return s_equals_t ? 1 : 2;
}

LengthCensus length_census(const DistancePartition& partition) {
  LengthCensus census;
  if (const auto* uniform = std::get_if<UniformPartition>(&partition)) {
    census.add(uniform->length(), uniform->q());
    return census;
  }
  const auto& general = std::get<GeneralPartition>(partition);
  census.add(general.s(), general.count_s());
  census.add(general.t(), general.count_t());
  census.add(general.st(), general.count_st());
  return census;
}

}  // namespace threedist
