#include "threedist/farey.hpp"

#include <string>

#include "threedist/errors.hpp"

namespace threedist {

FareyPair::FareyPair(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d,
                     std::int64_t order)
    : a_(a), b_(b), c_(c), d_(d), order_(order) {
  const bool ok = a >= 0 && b > 0 && c > 0 && d > 0 && b <= order && d <= order &&
                  BigInt(b) * c - BigInt(a) * d == 1 && b + d > order;
  if (!ok) {
    throw InvalidArgument("not a Farey pair of order " + std::to_string(order) + ": " +
                          std::to_string(a) + "/" + std::to_string(b) + ", " +
                          std::to_string(c) + "/" + std::to_string(d));
  }
}

Rational mediant(const Rational& x, const Rational& y) {
  return Rational(x.num() + y.num(), x.den() + y.den());
}

std::vector<Rational> farey_sequence(std::int64_t n, std::int64_t cap) {
  if (n < 1) throw InvalidArgument("Farey order must be positive");
  if (n > cap) {
    throw SizeLimitExceeded("Farey order " + std::to_string(n) + " exceeds cap " +
                            std::to_string(cap));
  }
  std::vector<Rational> out;
  std::int64_t a = 0, b = 1, c = 1, d = n;
  out.emplace_back(a, b);
  while (c <= n) {
    // Next term after a/b, c/d in F_n.
    const std::int64_t k = (n + b) / d;
    const std::int64_t next_c = k * c - a;
    const std::int64_t next_d = k * d - b;
    a = c;
    b = d;
    c = next_c;
    d = next_d;
    out.emplace_back(a, b);
    if (a == 1 && b == 1) break;
  }
  return out;
}

FareyLocation farey_neighbors(const RealValue& alpha, std::int64_t n) {
  if (n < 1) throw InvalidArgument("Farey order must be positive");
  if (n > kMaxOrder) throw SizeLimitExceeded("Farey order too large");

  std::int64_t a = 0, b = 1, c = 1, d = 1;
  auto order_at = [&](std::int64_t num, std::int64_t den) {
    return alpha.compare_or_throw(Rational(num, den));
  };

  while (b + d <= n) {
    auto med = order_at(a + c, b + d);
    if (med == std::strong_ordering::equal) return ExactMember{Rational(a + c, b + d)};
    if (med == std::strong_ordering::greater) {
      // Left end walks (a + k c)/(b + k d) upward; find the largest valid k.
      const std::int64_t k_max = (n - b) / d;
      std::int64_t good = 1;
      std::int64_t bad = k_max + 1;
      for (std::int64_t step = 2; step <= k_max; step *= 2) {
        if (order_at(a + step * c, b + step * d) == std::strong_ordering::less) {
          bad = step;
          break;
        }
        good = step;
      }
      while (bad - good > 1) {
        std::int64_t mid = good + (bad - good) / 2;
        if (order_at(a + mid * c, b + mid * d) == std::strong_ordering::less) {
          bad = mid;
        } else {
          good = mid;
        }
      }
      a += good * c;
      b += good * d;
      if (order_at(a, b) == std::strong_ordering::equal) return ExactMember{Rational(a, b)};
    } else {
      const std::int64_t k_max = (n - d) / b;
      std::int64_t good = 1;
      std::int64_t bad = k_max + 1;
      for (std::int64_t step = 2; step <= k_max; step *= 2) {
        if (order_at(c + step * a, d + step * b) == std::strong_ordering::greater) {
          bad = step;
          break;
        }
        good = step;
      }
      while (bad - good > 1) {
        std::int64_t mid = good + (bad - good) / 2;
        if (order_at(c + mid * a, d + mid * b) == std::strong_ordering::greater) {
          bad = mid;
        } else {
          good = mid;
        }
      }
      c += good * a;
      d += good * b;
      if (order_at(c, d) == std::strong_ordering::equal) return ExactMember{Rational(c, d)};
    }
  }
  return FareyPair(a, b, c, d, n);
}

std::vector<BigInt> continued_fraction(const Rational& x) {
  std::vector<BigInt> quotients;
  BigInt num = x.num();
  BigInt den = x.den();
  // Floor division for the first quotient so negative inputs stay canonical.
  BigInt q = x.floor();
  quotients.push_back(q);
  BigInt r = num - q * den;
  while (r != 0) {
    num = den;
    den = r;
    boost::multiprecision::divide_qr(num, den, q, r);
    quotients.push_back(q);
  }
  return quotients;
}

std::vector<Rational> convergents(const std::vector<BigInt>& quotients) {
  std::vector<Rational> out;
  BigInt h_prev2 = 0, h_prev = 1;
  BigInt k_prev2 = 1, k_prev = 0;
  for (const auto& q : quotients) {
    BigInt h = q * h_prev + h_prev2;
    BigInt k = q * k_prev + k_prev2;
    out.emplace_back(h, k);
    h_prev2 = std::move(h_prev);
    h_prev = std::move(h);
    k_prev2 = std::move(k_prev);
    k_prev = std::move(k);
  }
  if (out.size() > 1 && quotients.front() == 0) out.erase(out.begin());
  return out;
}

std::vector<Rational> semiconvergents(const std::vector<BigInt>& quotients,
                                      const std::optional<BigInt>& max_denominator) {
  std::vector<Rational> out;
  if (quotients.empty()) return out;
  BigInt h_prev2 = 1, h_prev = quotients.front();
  BigInt k_prev2 = 0, k_prev = 1;
  for (std::size_t i = 1; i < quotients.size(); ++i) {
    for (BigInt j = 1; j <= quotients[i]; ++j) {
      BigInt den = k_prev2 + j * k_prev;
      if (max_denominator && den > *max_denominator) return out;
      out.emplace_back(h_prev2 + j * h_prev, std::move(den));
    }
    BigInt h = quotients[i] * h_prev + h_prev2;
    BigInt k = quotients[i] * k_prev + k_prev2;
    h_prev2 = std::move(h_prev);
    h_prev = std::move(h);
    k_prev2 = std::move(k_prev);
    k_prev = std::move(k);
  }
  return out;
}

}  // namespace threedist
