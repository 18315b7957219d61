#include "threedist/three_gap.hpp"

#include <functional>
#include <string>

#include "threedist/errors.hpp"
#include "threedist/farey.hpp"
#include "threedist/orbit.hpp"

namespace threedist {

namespace {

void check_beta(const Rational& beta) {
  if (beta <= Rational(0) || beta >= Rational(1)) {
    throw InvalidArgument("beta " + beta.to_string() + " must lie in (0, 1)");
  }
}

bool is_wide(const RealValue& alpha, const Rational& beta) {
  // beta >= alpha and beta >= 1 - alpha
  return alpha.compare_or_throw(beta) != std::strong_ordering::greater &&
         alpha.compare_or_throw(Rational(1) - beta) != std::strong_ordering::less;
}

void check_narrow_precondition(const RealValue& alpha, const Rational& beta) {
  check_beta(beta);
  if (is_wide(alpha, beta)) {
    throw InvalidArgument("beta >= max(alpha, 1 - alpha); no minimal return indices needed");
  }
}

// Usable search horizon: the cap, shortened below the period of a rational orbit.
std::int64_t search_horizon(const RealValue& alpha, std::int64_t cap) {
  if (alpha.is_exact() && alpha.approx().den() <= cap) {
    return to_int64(alpha.approx().den()) - 1;
  }
  return cap;
}

[[noreturn]] void throw_not_found(const RealValue& alpha, std::int64_t cap) {
  if (alpha.is_exact() && alpha.approx().den() <= cap) {
    throw RationalAlphaDegenerate("orbit of " + alpha.describe() + " returns to 0 at index " +
                                  alpha.approx().den().str() + " before both returns occur");
  }
  throw GapSearchCapExceeded("minimal return indices exceed the scan cap " +
                             std::to_string(cap));
}

// Least n in [1, horizon] with pred(n), or 0 if none. pred must be monotone.
std::int64_t least_true(std::int64_t horizon, const std::function<bool(std::int64_t)>& pred) {
  if (horizon < 1 || !pred(horizon)) return 0;
  std::int64_t bad = 0;
  std::int64_t good = horizon;
  for (std::int64_t step = 1; step < horizon; step *= 2) {
    if (pred(step)) {
      good = step;
      break;
    }
    bad = step;
  }
  while (good - bad > 1) {
    std::int64_t mid = bad + (good - bad) / 2;
    if (pred(mid)) {
      good = mid;
    } else {
      bad = mid;
    }
  }
  return good;
}

}  // namespace

ReturnIndices minimal_return_indices(const RealValue& alpha, const Rational& beta,
                                     std::int64_t cap) {
  check_narrow_precondition(alpha, beta);
  const std::int64_t horizon = search_horizon(alpha, cap);
  auto pair_at = [&](std::int64_t n) {
    FareyLocation location = farey_neighbors(alpha, n);
    // n < period, so alpha is never a member of F_n here.
    return std::get<FareyPair>(location);
  };
  // min_{i<=n} {i alpha} = b alpha - a < beta  <=>  alpha < (beta + a) / b
  auto s_below = [&](std::int64_t n) {
    FareyPair pair = pair_at(n);
    return alpha.compare_or_throw((beta + Rational(pair.a())) / Rational(pair.b())) ==
           std::strong_ordering::less;
  };
  // 1 - max_{i<=n} {i alpha} = c - d alpha < beta  <=>  alpha > (c - beta) / d
  auto t_below = [&](std::int64_t n) {
    FareyPair pair = pair_at(n);
    return alpha.compare_or_throw((Rational(pair.c()) - beta) / Rational(pair.d())) ==
           std::strong_ordering::greater;
  };
  const std::int64_t b = least_true(horizon, s_below);
  const std::int64_t d = b == 0 ? 0 : least_true(horizon, t_below);
  if (b == 0 || d == 0) throw_not_found(alpha, cap);
  return {b, d};
}

ReturnIndices minimal_return_indices_scan(const RealValue& alpha, const Rational& beta,
                                          std::int64_t cap) {
  check_narrow_precondition(alpha, beta);
  const Rational upper = Rational(1) - beta;
  OrbitWalker walker(alpha);
  std::int64_t b = 0;
  std::int64_t d = 0;
  while (b == 0 || d == 0) {
    if (walker.index() >= cap) throw_not_found(alpha, cap);
    walker.advance();
    if (walker.closed()) throw_not_found(alpha, cap);
    if (b == 0 && walker.compare(beta) == std::strong_ordering::less) b = walker.index();
    if (d == 0 && walker.compare(upper) == std::strong_ordering::greater) d = walker.index();
  }
  return {b, d};
}

GapStructure gap_structure(const RealValue& alpha, const Rational& beta, std::int64_t cap) {
  check_beta(beta);
  if (is_wide(alpha, beta)) {
    return WideGaps{alpha, beta, Rational(2) * beta - Rational(1), Rational(1) - beta};
  }
  const ReturnIndices indices = minimal_return_indices(alpha, beta, cap);
  NarrowGaps gaps{alpha, beta, indices.b, indices.d, {}, {}, {}, {}, {}};
  gaps.s = (Rational(indices.b) * alpha.approx()).frac();
  gaps.t = Rational(1) - (Rational(indices.d) * alpha.approx()).frac();
  gaps.freq_b = beta - gaps.s;
  gaps.freq_d = beta - gaps.t;
  gaps.freq_bd = gaps.s + gaps.t - beta;

  const bool consistent = gaps.b != gaps.d && gaps.s < beta && gaps.t < beta &&
                          beta <= gaps.s + gaps.t;
  if (!consistent) {
    if (!alpha.is_exact()) {
      throw PrecisionInsufficient("gap structure of " + alpha.describe() +
                                  " is not resolved at this precision");
    }
    throw std::logic_error("three gap invariants violated for alpha " + alpha.describe());
  }
  return gaps;
}

std::map<std::int64_t, Rational> gap_frequencies(const GapStructure& structure) {
  if (const auto* wide = std::get_if<WideGaps>(&structure)) {
    return {{1, wide->freq_1}, {2, wide->freq_2}};
  }
  const auto& narrow = std::get<NarrowGaps>(structure);
  return {{narrow.b, narrow.freq_b}, {narrow.d, narrow.freq_d}, {narrow.b + narrow.d, narrow.freq_bd}};
}

std::set<std::int64_t> gap_set(const GapStructure& structure) {
  std::set<std::int64_t> out;
  for (const auto& [gap, freq] : gap_frequencies(structure)) {
    if (freq.sign() > 0) out.insert(gap);
  }
  return out;
}

std::int64_t gap_after(const GapStructure& structure, const Rational& position) {
  const Rational& beta = std::visit([](const auto& g) -> const Rational& { return g.beta; },
                                    structure);
  if (position.sign() < 0 || position >= beta) {
    throw NotAHit("position " + position.to_string() + " is not in [0, beta)");
  }
  if (const auto* wide = std::get_if<WideGaps>(&structure)) {
    const Rational& alpha = wide->alpha.approx();
    if (position < beta - alpha || position >= Rational(1) - alpha) return 1;
    return 2;
  }
  const auto& narrow = std::get<NarrowGaps>(structure);
  if (position < beta - narrow.s) return narrow.b;
  if (position < narrow.t) return narrow.b + narrow.d;
  return narrow.d;
}

std::vector<std::int64_t> hits(const RealValue& alpha, const Rational& beta, std::int64_t i_max) {
  check_beta(beta);
  if (i_max < 0) throw InvalidArgument("negative horizon");
  if (i_max > kMaxHitHorizon) throw SizeLimitExceeded("hit horizon too large");
  std::vector<std::int64_t> out;
  OrbitWalker walker(alpha);
  for (;;) {
    if (walker.compare(beta) == std::strong_ordering::less) out.push_back(walker.index());
    if (walker.index() == i_max) break;
    walker.advance();
  }
  return out;
}

std::map<std::int64_t, Rational> empirical_frequencies(const RealValue& alpha,
                                                       const Rational& beta,
                                                       std::int64_t n_indices) {
  if (n_indices < 1) throw InvalidArgument("census length must be positive");
  std::map<std::int64_t, std::int64_t> counts;
  std::int64_t previous = -1;
  for (std::int64_t i : hits(alpha, beta, n_indices - 1)) {
    if (previous >= 0) ++counts[i - previous];
    previous = i;
  }
  std::map<std::int64_t, Rational> out;
  for (const auto& [gap, count] : counts) out.emplace(gap, Rational(count, n_indices));
  return out;
}

}  // namespace threedist
