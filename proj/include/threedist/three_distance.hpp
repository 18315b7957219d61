#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "threedist/farey.hpp"
#include "threedist/length_census.hpp"
#include "threedist/rational.hpp"
#include "threedist/real_value.hpp"

namespace threedist {

enum class LengthClass { kS, kT, kST, kUniform };

std::string_view length_class_name(LengthClass cls);

// alpha = p/q in F_n: the n+1 points collapse onto the q points k/q.
struct UniformPartition {
  Rational alpha;
  std::int64_t n = 0;

  std::int64_t q() const { return to_int64(alpha.den()); }
  Rational length() const { return Rational(1, alpha.den()); }
};

// alpha strictly inside the Farey interval (a/b, c/d) of order n.
// s = b alpha - a is the smallest point {b alpha}; 1 - t = {d alpha} the largest.
class GeneralPartition {
 public:
  GeneralPartition(RealValue alpha, FareyPair pair);

  const RealValue& alpha() const { return alpha_; }
  const FareyPair& pair() const { return pair_; }
  std::int64_t n() const { return pair_.order(); }
  std::int64_t b() const { return pair_.b(); }
  std::int64_t d() const { return pair_.d(); }

  // Lengths computed from alpha.approx(); exact whenever alpha is exact.
  const Rational& s() const { return s_; }
  const Rational& t() const { return t_; }
  Rational st() const { return s_ + t_; }
  // Rigorous bound on |s - true s| (and likewise for t and s + t).
  Rational length_err() const;

  std::int64_t count_s() const { return n() + 1 - b(); }
  std::int64_t count_t() const { return n() + 1 - d(); }
  std::int64_t count_st() const { return b() + d() - (n() + 1); }

  Rational length(LengthClass cls) const;

 private:
  RealValue alpha_;
  FareyPair pair_;
  Rational s_;
  Rational t_;
};

using DistancePartition = std::variant<UniformPartition, GeneralPartition>;

DistancePartition decompose(const RealValue& alpha, std::int64_t n);

struct Successor {
  std::int64_t index;
  LengthClass cls;
  friend bool operator==(const Successor&, const Successor&) = default;
};

// Index whose point follows {i alpha} on the circle, with the class of the
// interval between them. The point {d alpha} is the maximum, so successor(d)
// = 0 closes the circle through the wrap interval [1 - t, 1).
Successor successor(const GeneralPartition& partition, std::int64_t i);

struct IntervalEntry {
  std::int64_t index;
  LengthClass cls;
  Rational length;
  friend bool operator==(const IntervalEntry&, const IntervalEntry&) = default;
};

// The intervals [{i_k alpha}, next point) in increasing position order, i_0 = 0.
std::vector<IntervalEntry> interval_sequence(const DistancePartition& partition);
std::vector<IntervalEntry> interval_sequence(const RealValue& alpha, std::int64_t n);

struct IndexBounds {
  bool n_ge_max_bd;
  bool n1_le_b_plus_d;
};

IndexBounds index_bounds(const GeneralPartition& partition);

// Number of distinct length values (not structural classes). Throws
// PrecisionInsufficient when an approximate alpha cannot rule out s = t.
int distinct_length_count(const DistancePartition& partition);

LengthCensus length_census(const DistancePartition& partition);

}  // namespace threedist
