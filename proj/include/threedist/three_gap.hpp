#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <variant>
#include <vector>

#include "threedist/rational.hpp"
#include "threedist/real_value.hpp"

namespace threedist {

inline constexpr std::int64_t kDefaultScanCap = 1'000'000;
inline constexpr std::int64_t kMaxHitHorizon = 100'000'000;

// beta >= max(alpha, 1 - alpha): gaps 1 and 2.
struct WideGaps {
  RealValue alpha;
  Rational beta;
  Rational freq_1;  // 2 beta - 1
  Rational freq_2;  // 1 - beta
};

// beta < max(alpha, 1 - alpha): gaps b, d and b + d.
struct NarrowGaps {
  RealValue alpha;
  Rational beta;
  std::int64_t b = 0;
  std::int64_t d = 0;
  Rational s;        // {b alpha}
  Rational t;        // 1 - {d alpha}
  Rational freq_b;   // beta - s
  Rational freq_d;   // beta - t
  Rational freq_bd;  // s + t - beta
};

using GapStructure = std::variant<WideGaps, NarrowGaps>;

struct ReturnIndices {
  std::int64_t b;
  std::int64_t d;
  friend bool operator==(const ReturnIndices&, const ReturnIndices&) = default;
};

// Least b, d >= 1 with {b alpha} < beta and {d alpha} > 1 - beta, found by
// galloping over decompose(alpha, n): min_{i<=n} {i alpha} is nonincreasing in n.
ReturnIndices minimal_return_indices(const RealValue& alpha, const Rational& beta,
                                     std::int64_t cap = kDefaultScanCap);
// Reference linear scan; same results and errors as minimal_return_indices.
ReturnIndices minimal_return_indices_scan(const RealValue& alpha, const Rational& beta,
                                          std::int64_t cap = kDefaultScanCap);

GapStructure gap_structure(const RealValue& alpha, const Rational& beta,
                           std::int64_t cap = kDefaultScanCap);

// Gap value -> frequency (natural density over all indices).
std::map<std::int64_t, Rational> gap_frequencies(const GapStructure& structure);
// Gaps with positive frequency.
std::set<std::int64_t> gap_set(const GapStructure& structure);

// Gap following a hit at position x = {i alpha}, x in [0, beta).
std::int64_t gap_after(const GapStructure& structure, const Rational& position);

// All i in [0, i_max] with {i alpha} < beta, ascending.
std::vector<std::int64_t> hits(const RealValue& alpha, const Rational& beta, std::int64_t i_max);

// Gap census over hits with index < n_indices, each count divided by n_indices.
std::map<std::int64_t, Rational> empirical_frequencies(const RealValue& alpha,
                                                       const Rational& beta,
                                                       std::int64_t n_indices);

}  // namespace threedist
