#include <doctest.h>

#include "threedist/errors.hpp"
#include "threedist/oracle.hpp"

using threedist::LengthCensus;
using threedist::Rational;
namespace oracle = threedist::oracle;

TEST_SUITE("oracle") {
  TEST_CASE("brute lengths") {
    LengthCensus expected;
    expected.add(Rational(17, 100), 3);
    expected.add(Rational(49, 200), 2);
    CHECK(oracle::brute_lengths(Rational(117, 200), 4) == expected);

    LengthCensus halves;
    halves.add(Rational(1, 2), 2);
    CHECK(oracle::brute_lengths(Rational(1, 2), 3) == halves);

    LengthCensus fifths;
    fifths.add(Rational(1, 5), 5);
    CHECK(oracle::brute_lengths(Rational(3, 5), 4) == fifths);
    CHECK(oracle::brute_lengths(Rational(3, 5), 4).total() == Rational(1));
  }

  TEST_CASE("approximate input refused") {
    CHECK_THROWS_AS(oracle::brute_lengths(threedist::RealValue::named("phi_frac"), 3),
                    threedist::ApproximateInputRefused);
    CHECK_THROWS_AS(oracle::brute_gaps(threedist::RealValue::named("phi_frac"), Rational(1, 2), 3),
                    threedist::ApproximateInputRefused);
  }

  TEST_CASE("brute gaps") {
    auto hits = oracle::brute_gaps(Rational(117, 200), Rational(3, 10), 13);
    CHECK(hits.hits == std::vector<std::int64_t>{0, 2, 7, 9, 12});
    CHECK(hits.gaps == std::vector<std::int64_t>{2, 5, 2, 3});

    // 408/985 is a convergent of sqrt(2) - 1; stay below its period.
    auto wide = oracle::brute_gaps(Rational(408, 985), Rational(7, 10), 985);
    CHECK(wide.counts.size() == 2);
    CHECK(wide.counts.count(1) == 1);
    CHECK(wide.counts.count(2) == 1);
    CHECK_THROWS_AS(oracle::brute_gaps(Rational(408, 985), Rational(7, 10), 1000),
                    threedist::RationalAlphaDegenerate);

    CHECK(oracle::brute_gaps(Rational(1, 3), Rational(1, 2), 0).hits.empty());
  }

  TEST_CASE("exact proxy") {
    auto phi = threedist::RealValue::named("phi_frac");
    auto proxy = oracle::exact_proxy(phi, 1000);
    CHECK(proxy.den() > 1000);
    CHECK(phi.compare(proxy) == std::nullopt);
    // Ratios of consecutive Fibonacci numbers q, p satisfy q^2 - qp - p^2 = +-1.
    const threedist::BigInt& p = proxy.num();
    const threedist::BigInt& q = proxy.den();
    CHECK(abs(q * q - q * p - p * p) == 1);
    CHECK(oracle::exact_proxy(threedist::real_value("2/7"), 1000) == Rational(2, 7));
  }
}
