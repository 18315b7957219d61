#include <doctest.h>

#include "support/support.hpp"
#include "threedist/errors.hpp"
#include "threedist/rational.hpp"

using threedist::BigInt;
using threedist::Rational;

TEST_SUITE("rational") {
  TEST_CASE("construction reduces and normalizes sign") {
    Rational r(BigInt(6), BigInt(-8));
    CHECK(r.num() == -3);
    CHECK(r.den() == 4);
    CHECK(Rational(BigInt(0), BigInt(-5)).den() == 1);
    CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), threedist::InvalidArgument);
  }

  TEST_CASE("parse and print") {
    CHECK(Rational::parse("10/17").to_string() == "10/17");
    CHECK(Rational::parse("-4/6").to_string() == "-2/3");
    CHECK(Rational::parse("7").to_string() == "7/1");
    CHECK(Rational::parse_decimal("0.585") == Rational(117, 200));
    CHECK(Rational::parse("007/010") == Rational(7, 10));
    CHECK(Rational::parse_decimal("0.0089") == Rational(89, 10000));
    CHECK(Rational::parse_decimal("-1.25") == Rational(-5, 4));
    CHECK(Rational::parse_decimal(".5") == Rational(1, 2));
    CHECK_THROWS_AS(Rational::parse("1/0"), threedist::ParseError);
    CHECK_THROWS_AS(Rational::parse("1/x"), threedist::ParseError);
    CHECK_THROWS_AS(Rational::parse_decimal("0.5.1"), threedist::ParseError);
    CHECK_THROWS_AS(Rational::parse_decimal("abc"), threedist::ParseError);
  }

  TEST_CASE("floor and fractional part") {
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(-7, 2).frac() == Rational(1, 2));
    CHECK(Rational(3, 2).frac() == Rational(1, 2));
    CHECK(Rational(4).frac().is_zero());
  }

  TEST_CASE("fixed-point display rounds half away from zero") {
    CHECK(Rational(1, 8).to_fixed(2) == "0.13");
    CHECK(Rational(-1, 8).to_fixed(2) == "-0.13");
    CHECK(Rational(2, 3).to_fixed(6) == "0.666667");
    CHECK(Rational(5).to_fixed(3) == "5.000");
    CHECK(Rational(-1, 1000).to_fixed(2) == "0.00");
    CHECK(Rational(1, 2).to_fixed(0) == "1");
  }

  TEST_CASE("field identities on random values") {
    auto rng = threedist::testing::make_rng(11);
    for (int k = 0; k < 300; ++k) {
      Rational x(threedist::testing::uniform_int(rng, -1000, 1000),
                 threedist::testing::uniform_int(rng, 1, 1000));
      Rational y(threedist::testing::uniform_int(rng, -1000, 1000),
                 threedist::testing::uniform_int(rng, 1, 1000));
      CHECK((x + y) - y == x);
      CHECK(x * y == y * x);
      if (!y.is_zero()) CHECK((x / y) * y == x);
      CHECK(((x < y) == (x - y).sign() < 0));
      CHECK(x.floor() + x.frac() == x);
    }
  }
}
