#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "auctionlab/errors.hpp"
#include "auctionlab/myerson.hpp"

using namespace auctionlab;

namespace {

SingleDimDistribution dist(std::vector<long> values, std::vector<Rational> probs) {
  std::vector<Rational> v;
  for (long x : values) v.emplace_back(x);
  return make_single_dim(std::move(v), std::move(probs));
}

SingleDimDistribution random_dist(std::mt19937_64& rng, int max_support) {
  int n = 1 + static_cast<int>(rng() % max_support);
  std::vector<Rational> values, probs;
  long v = 0;
  long total = 0;
  std::vector<long> weights;
  for (int k = 0; k < n; ++k) {
    v += 1 + static_cast<long>(rng() % 7);
    values.emplace_back(v);
    long w = 1 + static_cast<long>(rng() % 9);
    weights.push_back(w);
    total += w;
  }
  for (long w : weights) probs.push_back(make_rational(w, total));
  return make_single_dim(std::move(values), std::move(probs));
}

}  // namespace

TEST_CASE("tail masses and raw virtuals") {
  SingleDimDistribution d = dist({1, 2, 3}, {Rational(9, 20), Rational(1, 10),
                                             Rational(9, 20)});
  CHECK(tail_mass(d, 1) == Rational(1));
  CHECK(tail_mass(d, 2) == Rational(11, 20));
  CHECK(tail_mass(d, 3) == Rational(9, 20));
  CHECK(tail_mass(d, 4) == Rational(0));
  std::vector<Rational> phi = single_dim_virtuals(d);
  REQUIRE(phi.size() == 3);
  CHECK(phi[0] == Rational(-2, 9));
  CHECK(phi[1] == Rational(-5, 2));
  CHECK(phi[2] == Rational(3));
}

TEST_CASE("ironing the valley distribution") {
  SingleDimDistribution d = dist({1, 2, 3}, {Rational(9, 20), Rational(1, 10),
                                             Rational(9, 20)});
  IronedTable t = iron(d);
  CHECK(t.phi_bar == std::vector<Rational>{Rational(-7, 11), Rational(-7, 11), Rational(3)});
  CHECK(t.block_id == std::vector<int>{0, 0, 1});
  REQUIRE(t.blocks.size() == 2);
  CHECK(t.blocks[0] == std::pair<int, int>{1, 2});
  CHECK(t.blocks[1] == std::pair<int, int>{3, 3});

  IronedCode code = encode_ironed(d, 1);
  CHECK(code.head == Rational(1));        // v^1 R(v^1)
  CHECK(code.tail == Rational(27, 20));   // v^3 R(v^3)
  CHECK(code.mass == Rational(11, 20));   // R(v^1) - R(v^3)
  CHECK(decode_ironed(code) == Rational(-7, 11));
  CHECK(decode_ironed(encode_ironed(d, 2)) == Rational(-7, 11));
  CHECK(decode_ironed(encode_ironed(d, 3)) == Rational(3));
}

TEST_CASE("already-monotone virtuals survive ironing unchanged") {
  SingleDimDistribution d = dist({5, 6}, {Rational(1, 2), Rational(1, 2)});
  IronedTable t = iron(d);
  CHECK(t.phi == std::vector<Rational>{Rational(4), Rational(6)});
  CHECK(t.phi_bar == t.phi);
  CHECK(t.blocks.size() == 2);

  SingleDimDistribution peak = dist({1, 2, 3}, {Rational(1, 10), Rational(4, 5),
                                                Rational(1, 10)});
  std::vector<Rational> phi = single_dim_virtuals(peak);
  CHECK(phi == std::vector<Rational>{Rational(-8), Rational(15, 8), Rational(3)});
  CHECK(iron(peak).phi_bar == phi);

  SingleDimDistribution point = dist({7}, {Rational(1)});
  CHECK(iron(point).phi_bar == std::vector<Rational>{Rational(7)});
}

TEST_CASE("input validation") {
  SingleDimDistribution hole = dist({1, 2}, {Rational(1), Rational(0)});
  CHECK_THROWS_AS(single_dim_virtuals(hole), ZeroMassError);
  CHECK_THROWS_AS(iron(hole), ZeroMassError);
  CHECK_THROWS_AS(dist({2, 1}, {Rational(1, 2), Rational(1, 2)}), ValueOrderError);
  CHECK_THROWS_AS(dist({0, 1}, {Rational(1, 2), Rational(1, 2)}), ValueOrderError);
  CHECK_THROWS_AS(dist({1, 2}, {Rational(1, 2), Rational(1, 4)}), ProbabilitySumError);
  CHECK_THROWS_AS(dist({1, 2}, {Rational(1)}), LengthMismatchError);
  CHECK_THROWS_AS(dist({1, 2}, {Rational(3, 2), Rational(-1, 2)}), NegativeProbabilityError);
  SingleDimDistribution d = dist({5, 6}, {Rational(1, 2), Rational(1, 2)});
  CHECK_THROWS_AS(myerson_winner({d, d}, {Rational(5), Rational(7)}), ValueNotInSupportError);
  CHECK_THROWS_AS(myerson_winner({d, d}, {Rational(5)}), LengthMismatchError);
}

TEST_CASE("ironing properties on random distributions") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    SingleDimDistribution d = random_dist(rng, 8);
    IronedTable t = iron(d);
    int n = d.n();
    bool monotone = true;
    for (int k = 1; k < n; ++k) {
      CHECK(t.phi_bar[k - 1] <= t.phi_bar[k]);
      monotone = monotone && t.phi[k - 1] <= t.phi[k];
    }
    if (monotone) CHECK(t.phi_bar == t.phi);
    for (size_t b = 0; b < t.blocks.size(); ++b) {
      auto [lo, hi] = t.blocks[b];
      Rational avg(0);
      for (int k = lo; k <= hi; ++k) {
        CHECK(t.block_id[k - 1] == static_cast<int>(b));
        CHECK(t.phi_bar[k - 1] == t.phi_bar[lo - 1]);
        avg += d.probs[k - 1] * t.phi[k - 1];
      }
      // mass-weighted block average of phi telescopes to the segment slope
      CHECK(avg == t.phi_bar[lo - 1] * (tail_mass(d, lo) - tail_mass(d, hi + 1)));
      CHECK(decode_ironed(encode_ironed(d, lo)) == t.phi_bar[lo - 1]);
    }
    // envelope property in tail sums: sum_{k>=K} f phi_bar = env(R(K)) sits
    // on or above sum_{k>=K} f phi = v^K R(K), with equality at K = 1
    Rational pref_phi(0), pref_bar(0);
    for (int k = n; k >= 1; --k) {
      pref_phi += d.probs[k - 1] * t.phi[k - 1];
      pref_bar += d.probs[k - 1] * t.phi_bar[k - 1];
      CHECK(pref_bar >= pref_phi);
    }
    CHECK(pref_bar == pref_phi);
  }
}

TEST_CASE("winner and price on the uniform pair") {
  SingleDimDistribution u56 = dist({5, 6}, {Rational(1, 2), Rational(1, 2)});
  WinnerResult r = myerson_winner({u56, u56}, {Rational(6), Rational(6)});
  REQUIRE(r.winner.has_value());
  CHECK(*r.winner == 1);
  CHECK(*r.price == Rational(6));

  // at reports (6,5) bidder 1 could drop to 5 and still win the phi_bar tie
  // (ties go to the lowest index), so the threshold price is 5
  r = myerson_winner({u56, u56}, {Rational(6), Rational(5)});
  CHECK(*r.winner == 1);
  CHECK(*r.price == Rational(5));

  r = myerson_winner({u56, u56}, {Rational(5), Rational(6)});
  CHECK(*r.winner == 2);
  CHECK(*r.price == Rational(6));  // bidder 2 must strictly beat bidder 1
}

TEST_CASE("price is the lowest winning support value, not a virtual tie point") {
  // both bidders iron to phi_bar = (0, 4) but over different supports
  SingleDimDistribution d1 = dist({2, 4}, {Rational(1, 2), Rational(1, 2)});
  SingleDimDistribution d2 = dist({1, 4}, {Rational(3, 4), Rational(1, 4)});
  CHECK(iron(d1).phi_bar == std::vector<Rational>{Rational(0), Rational(4)});
  CHECK(iron(d2).phi_bar == std::vector<Rational>{Rational(0), Rational(4)});
  WinnerResult r = myerson_winner({d1, d2}, {Rational(2), Rational(4)});
  REQUIRE(r.winner.has_value());
  CHECK(*r.winner == 2);
  // bidder 2's lower support value 1 has phi_bar 0, which ties bidder 1's 0
  // and loses to the lower index, so the price stays at 4
  CHECK(*r.price == Rational(4));

  r = myerson_winner({d1, d2}, {Rational(2), Rational(1)});
  CHECK(*r.winner == 1);
  CHECK(*r.price == Rational(2));

  // negative ironed virtual at the report: keep the item
  SingleDimDistribution neg = dist({1, 10}, {Rational(1, 2), Rational(1, 2)});
  REQUIRE(iron(neg).phi_bar[0] == Rational(-8));
  WinnerResult none = myerson_winner({neg}, {Rational(1)});
  CHECK(!none.winner);
  CHECK(!none.price);
}

TEST_CASE("expected revenue closed cases") {
  SingleDimDistribution u56 = dist({5, 6}, {Rational(1, 2), Rational(1, 2)});
  CHECK(myerson_expected_revenue({u56}) == Rational(5));
  SingleDimDistribution point5 = dist({5}, {Rational(1)});
  CHECK(myerson_expected_revenue({point5, point5}) == Rational(5));
  CHECK(myerson_expected_revenue({u56, u56}) == Rational(11, 2));
}
