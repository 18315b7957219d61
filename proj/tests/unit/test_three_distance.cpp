#include <doctest.h>

#include <algorithm>
#include <set>

#include "support/support.hpp"
#include "threedist/errors.hpp"
#include "threedist/oracle.hpp"
#include "threedist/three_distance.hpp"

using threedist::DistancePartition;
using threedist::FareyPair;
using threedist::GeneralPartition;
using threedist::LengthClass;
using threedist::Rational;
using threedist::RealValue;
using threedist::UniformPartition;

namespace {

const GeneralPartition& general(const DistancePartition& p) { return std::get<GeneralPartition>(p); }

// Indices 0..n sorted by the position {i alpha}.
std::vector<std::int64_t> sorted_indices(const Rational& alpha, std::int64_t n) {
  std::vector<std::int64_t> idx(static_cast<std::size_t>(n + 1));
  for (std::int64_t i = 0; i <= n; ++i) idx[static_cast<std::size_t>(i)] = i;
  std::sort(idx.begin(), idx.end(), [&](auto x, auto y) {
    return threedist::testing::frac_multiple(x, alpha) < threedist::testing::frac_multiple(y, alpha);
  });
  return idx;
}

}  // namespace

TEST_SUITE("three_distance") {
  TEST_CASE("log2 3 rows from the ladder") {
    auto alpha = RealValue::named("log2_3_frac");
    auto one = general(threedist::decompose(alpha, 1));
    CHECK(one.s().to_fixed(3) == "0.585");
    CHECK(one.t().to_fixed(3) == "0.415");
    CHECK(one.count_s() == 1);
    CHECK(one.count_t() == 1);
    CHECK(one.count_st() == 0);

    auto eleven = general(threedist::decompose(alpha, 11));
    CHECK(eleven.pair() == FareyPair(4, 7, 3, 5, 11));
    CHECK(eleven.s().to_fixed(3) == "0.095");
    CHECK(eleven.t().to_fixed(3) == "0.075");
    CHECK(eleven.count_s() == 5);
    CHECK(eleven.count_t() == 7);
    CHECK(eleven.count_st() == 0);
    CHECK(eleven.length_err() <= Rational(12) * alpha.err());
  }

  TEST_CASE("uniform case") {
    auto p = threedist::decompose(threedist::real_value("1/2"), 3);
    REQUIRE(std::holds_alternative<UniformPartition>(p));
    CHECK(std::get<UniformPartition>(p).q() == 2);
    CHECK(threedist::distinct_length_count(p) == 1);
    auto seq = threedist::interval_sequence(p);
    REQUIRE(seq.size() == 2);
    CHECK(seq[0] == threedist::IntervalEntry{0, LengthClass::kUniform, Rational(1, 2)});
    CHECK(seq[1] == threedist::IntervalEntry{1, LengthClass::kUniform, Rational(1, 2)});

    // 3/7 in F_9: points k/7 reached first by i = k * 5 mod 7.
    auto q7 = threedist::interval_sequence(threedist::real_value("3/7"), 9);
    std::vector<std::int64_t> idx;
    for (const auto& e : q7) idx.push_back(e.index);
    CHECK(idx == sorted_indices(Rational(3, 7), 6));
  }

  TEST_CASE("golden ratio at n = 3") {
    auto phi = RealValue::named("phi_frac");
    auto p = threedist::decompose(phi, 3);
    const auto& g = general(p);
    CHECK(g.pair() == FareyPair(1, 2, 2, 3, 3));
    CHECK(g.count_s() == 2);
    CHECK(g.count_t() == 1);
    CHECK(g.count_st() == 1);
    CHECK(threedist::distinct_length_count(p) == 3);
    std::vector<std::string> lengths;
    for (const auto& e : threedist::interval_sequence(p)) lengths.push_back(e.length.to_fixed(3));
    CHECK(lengths == std::vector<std::string>{"0.236", "0.382", "0.236", "0.146"});
  }

  TEST_CASE("successor examples") {
    auto g = general(threedist::decompose(RealValue::named("log2_3_frac"), 11));
    CHECK(threedist::successor(g, 0) == threedist::Successor{7, LengthClass::kS});
    CHECK(threedist::successor(g, 5) == threedist::Successor{0, LengthClass::kT});
    CHECK_THROWS_AS(threedist::successor(g, 12), threedist::IndexOutOfRange);
    CHECK_THROWS_AS(threedist::successor(g, -1), threedist::IndexOutOfRange);

    auto phi = general(threedist::decompose(RealValue::named("phi_frac"), 3));
    // Sorted: 0 < {2a} < {1a} < {3a}; {3a} is the maximum and wraps to 0.
    CHECK(threedist::successor(phi, 3) == threedist::Successor{0, LengthClass::kT});
    CHECK(threedist::successor(phi, 0) == threedist::Successor{2, LengthClass::kS});
    CHECK(threedist::successor(phi, 2) == threedist::Successor{1, LengthClass::kST});
    CHECK(threedist::successor(phi, 1) == threedist::Successor{3, LengthClass::kS});
  }

  TEST_CASE("three notes sequence") {
    auto seq = threedist::interval_sequence(RealValue::named("log2_3_frac"), 2);
    REQUIRE(seq.size() == 3);
    CHECK(seq[0].index == 0);
    CHECK(seq[0].cls == LengthClass::kS);
    CHECK(seq[0].length.to_fixed(3) == "0.170");
    CHECK(seq[1].index == 2);
    CHECK(seq[1].cls == LengthClass::kT);
    CHECK(seq[2].index == 1);
    CHECK(seq[2].length.to_fixed(3) == "0.415");
  }

  TEST_CASE("index bounds") {
    auto g = general(threedist::decompose(RealValue::named("log2_3_frac"), 11));
    auto bounds = threedist::index_bounds(g);
    CHECK(bounds.n_ge_max_bd);
    CHECK(bounds.n1_le_b_plus_d);
    auto g1 = general(threedist::decompose(RealValue::named("sqrt2_frac"), 1));
    CHECK(g1.b() == 1);
    CHECK(g1.d() == 1);
    CHECK(threedist::index_bounds(g1).n_ge_max_bd);
    CHECK(threedist::index_bounds(g1).n1_le_b_plus_d);
  }

  TEST_CASE("mediant degeneracy") {
    // 3/5 is the mediant of (1/2, 2/3): at n = 4 every gap is 1/5.
    auto p = threedist::decompose(threedist::real_value("3/5"), 4);
    const auto& g = general(p);
    CHECK(g.pair() == FareyPair(1, 2, 2, 3, 4));
    CHECK(g.s() == Rational(1, 5));
    CHECK(g.t() == Rational(1, 5));
    CHECK(g.count_st() == 0);
    CHECK(threedist::distinct_length_count(p) == 1);
    CHECK(threedist::length_census(p) == threedist::oracle::brute_lengths(Rational(3, 5), 4));
    // At n = 3 the same pair leaves one interval of length 2/5.
    auto p3 = threedist::decompose(threedist::real_value("3/5"), 3);
    CHECK(general(p3).count_st() == 1);
    CHECK(threedist::distinct_length_count(p3) == 2);
    CHECK(threedist::length_census(p3) == threedist::oracle::brute_lengths(Rational(3, 5), 3));
  }

  TEST_CASE("distinct count needs precision near a mediant") {
    auto near = RealValue::from_parts(Rational(3, 5), Rational(1, 1'000'000),
                                      threedist::Origin::kNamedConstant, "phi_frac", 20);
    auto p = threedist::decompose(near, 3);
    CHECK_THROWS_AS(threedist::distinct_length_count(p), threedist::PrecisionInsufficient);
  }

  TEST_CASE("oracle equality and structure on random rationals") {
    auto rng = threedist::testing::make_rng(23);
    for (int k = 0; k < 300; ++k) {
      const std::int64_t n = threedist::testing::uniform_int(rng, 1, 200);
      const std::int64_t q = threedist::testing::uniform_int(rng, n + 1, 3000);
      const Rational alpha = threedist::testing::random_with_denominator(rng, q);
      auto p = threedist::decompose(RealValue::exact(alpha), n);
      const auto& g = general(p);
      CHECK(threedist::length_census(p) == threedist::oracle::brute_lengths(alpha, n));
      CHECK(g.count_s() + g.count_t() + g.count_st() == n + 1);
      CHECK(Rational(g.count_s()) * g.s() + Rational(g.count_t()) * g.t() +
                Rational(g.count_st()) * g.st() ==
            Rational(1));

      // Successor data against the sorted order of the points.
      auto order = sorted_indices(alpha, n);
      auto seq = threedist::interval_sequence(p);
      REQUIRE(seq.size() == order.size());
      std::set<std::int64_t> seen;
      for (std::size_t j = 0; j < seq.size(); ++j) {
        CHECK(seq[j].index == order[j]);
        seen.insert(seq[j].index);
        const Rational next = j + 1 < seq.size()
                                  ? threedist::testing::frac_multiple(order[j + 1], alpha)
                                  : Rational(1);
        CHECK(seq[j].length == next - threedist::testing::frac_multiple(order[j], alpha));
      }
      CHECK(seen.size() == static_cast<std::size_t>(n + 1));
      // The last point is {d alpha} and the wrap interval has length t.
      CHECK(order.back() == g.d());
      CHECK(seq.back().length == g.t());
      CHECK(order[1] == g.b());
    }
  }

  TEST_CASE("monotone refinement splits one interval of the largest length") {
    auto rng = threedist::testing::make_rng(29);
    for (int k = 0; k < 20; ++k) {
      const Rational alpha = threedist::testing::random_with_denominator(rng, 1009);
      auto value = RealValue::exact(alpha);
      auto previous = threedist::length_census(threedist::decompose(value, 1));
      for (std::int64_t n = 2; n <= 300; ++n) {
        auto current = threedist::length_census(threedist::decompose(value, n));
        CHECK(current.intervals() == previous.intervals() + 1);
        // Multiset difference: one interval of length L removed, two added summing to L.
        std::vector<Rational> removed;
        std::vector<Rational> added;
        std::set<Rational> keys;
        for (const auto& [len, c] : previous.entries()) keys.insert(len);
        for (const auto& [len, c] : current.entries()) keys.insert(len);
        for (const auto& len : keys) {
          auto count_in = [&](const threedist::LengthCensus& census) -> std::int64_t {
            auto it = census.entries().find(len);
            return it == census.entries().end() ? 0 : it->second;
          };
          for (auto c = count_in(current); c < count_in(previous); ++c) removed.push_back(len);
          for (auto c = count_in(previous); c < count_in(current); ++c) added.push_back(len);
        }
        REQUIRE(removed.size() == 1);
        REQUIRE(added.size() == 2);
        CHECK(added[0] + added[1] == removed[0]);
        CHECK(removed[0] == previous.entries().rbegin()->first);
        previous = current;
      }
    }
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(threedist::decompose(RealValue::named("phi_frac", 8), 10'000),
                    threedist::PrecisionInsufficient);
    CHECK_THROWS_AS(threedist::decompose(threedist::real_value("1/3"), 0),
                    threedist::InvalidArgument);
  }
}
