#include <doctest.h>

#include "threedist/errors.hpp"
#include "threedist/oracle.hpp"
#include "threedist/temperament.hpp"

using threedist::RealValue;

namespace {

std::vector<std::int64_t> scan_two_length(const threedist::Rational& alpha, std::int64_t n_max) {
  std::vector<std::int64_t> out;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    if (threedist::oracle::brute_lengths(alpha, n).distinct() == 2) out.push_back(n);
  }
  return out;
}

}  // namespace

TEST_SUITE("temperament") {
  TEST_CASE("two-length orders") {
    auto log2_3 = RealValue::named("log2_3_frac");
    CHECK(threedist::two_length_orders(log2_3, 16) == std::vector<std::int64_t>{1, 2, 4, 6, 11, 16});
    // Fibonacci note counts for the golden ratio.
    auto phi = threedist::two_length_orders(RealValue::named("phi_frac"), 12);
    CHECK(phi == std::vector<std::int64_t>{1, 2, 4, 7, 12});
    CHECK(threedist::two_length_orders(log2_3, 1) == std::vector<std::int64_t>{1});
    CHECK_THROWS_AS(threedist::two_length_orders(log2_3, 0), threedist::InvalidArgument);
  }

  TEST_CASE("two-length orders agree with the oracle") {
    const char* names[] = {"phi_frac", "sqrt2_frac", "log2_3_frac"};
    for (const char* name : names) {
      auto alpha = RealValue::named(name);
      auto proxy = threedist::oracle::exact_proxy(alpha, 10'000);
      CHECK(threedist::two_length_orders(alpha, 200) == scan_two_length(proxy, 200));
    }
    // A rational generator stops once it is a member of F_n.
    auto seven = threedist::real_value("3/7");
    CHECK(threedist::two_length_orders(seven, 40) == scan_two_length(threedist::Rational(3, 7), 6));
  }

  TEST_CASE("report rows") {
    auto report = threedist::temperament_report(RealValue::named("log2_3_frac"), {2, 3, 5, 7, 12, 17});
    REQUIRE(report.rows.size() == 6);
    for (const auto& row : report.rows) {
      CHECK(row.two_length);
      CHECK(row.lengths.distinct() == 2);
      CHECK(row.intervals.size() == static_cast<std::size_t>(row.notes));
      CHECK(row.ranks_in_position_order.size() == static_cast<std::size_t>(row.notes));
      if (row.notes > 2) {
        CHECK(row.intervals.front().cls != row.intervals.back().cls);
      }
    }
    const auto& twelve = report.rows[4];
    CHECK(twelve.lengths.entries().size() == 2);
    auto it = twelve.lengths.entries().begin();
    CHECK(it->first.to_fixed(6) == "0.075187");
    CHECK(it->second == 7);
    ++it;
    CHECK(it->first.to_fixed(6) == "0.094738");
    CHECK(it->second == 5);

    std::vector<std::string> conv;
    for (const auto& q : report.convergent_denominators) conv.push_back(threedist::to_string(q));
    CHECK(conv == std::vector<std::string>{"1", "2", "5", "12"});
  }
}
