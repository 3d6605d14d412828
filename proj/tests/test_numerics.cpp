#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "auctionlab/errors.hpp"
#include "auctionlab/instance.hpp"
#include "auctionlab/linalg.hpp"
#include "auctionlab/rational.hpp"

using namespace auctionlab;

TEST_CASE("rational parse and render round-trip") {
  CHECK(render_rational(parse_rational("3/4")) == "3/4");
  CHECK(render_rational(parse_rational("-7")) == "-7/1");
  CHECK(render_rational(parse_rational("0")) == "0/1");
  CHECK(render_rational(parse_rational("6/4")) == "3/2");
  CHECK(render_rational(parse_rational("-6/4")) == "-3/2");
  CHECK(parse_rational("10/5") == Rational(2));

  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1 /2"), std::invalid_argument);
  CHECK_THROWS_AS(make_rational(Integer(1), Integer(0)), std::invalid_argument);
}

TEST_CASE("floor and ceil are exact on negatives") {
  CHECK(floor_div(Integer(7), Integer(2)) == 3);
  CHECK(ceil_div(Integer(7), Integer(2)) == 4);
  CHECK(floor_div(Integer(-7), Integer(2)) == -4);
  CHECK(ceil_div(Integer(-7), Integer(2)) == -3);
  CHECK(floor_rat(make_rational(Integer(7), Integer(2))) == 3);
  CHECK(ceil_rat(make_rational(Integer(7), Integer(2))) == 4);
  CHECK(floor_rat(make_rational(Integer(-7), Integer(2))) == -4);
  CHECK(ceil_rat(make_rational(Integer(-7), Integer(2))) == -3);
  CHECK(floor_rat(Rational(5)) == 5);
  CHECK(ceil_rat(Rational(5)) == 5);
}

namespace {

BidderSpec uniform_two_level() {
  BidderSpec b;
  b.n = 2;
  b.values = {Rational(1), Rational(2)};
  b.probs[0] = {Rational(1, 4), Rational(1, 4)};
  b.probs[1] = {Rational(1, 4), Rational(1, 4)};
  return b;
}

}  // namespace

TEST_CASE("instance validation rejects malformed specs") {
  BidderSpec good = uniform_two_level();
  CHECK_NOTHROW(make_instance(good, good));

  BidderSpec short_mass = good;
  short_mass.probs[1][1] = Rational(3, 20);  // total 9/10
  CHECK_THROWS_AS(make_instance(short_mass, good), ProbabilitySumError);

  BidderSpec bad_order = good;
  bad_order.values = {Rational(5), Rational(5)};
  CHECK_THROWS_AS(make_instance(bad_order, good), ValueOrderError);

  BidderSpec nonpositive = good;
  nonpositive.values = {Rational(0), Rational(2)};
  CHECK_THROWS_AS(make_instance(nonpositive, good), ValueOrderError);

  BidderSpec negative = good;
  negative.probs[0][0] = Rational(-1, 4);
  negative.probs[0][1] = Rational(3, 4);
  CHECK_THROWS_AS(make_instance(negative, good), NegativeProbabilityError);

  BidderSpec ragged = good;
  ragged.probs[0].pop_back();
  CHECK_THROWS_AS(make_instance(ragged, good), LengthMismatchError);
}

TEST_CASE("value and mass conventions at the boundary levels") {
  Instance inst = make_instance(uniform_two_level(), uniform_two_level());
  const BidderSpec& b = inst.bidder(1);
  CHECK(b.value(0) == 0);
  CHECK(b.value(1) == 1);
  CHECK(b.value(2) == 2);
  CHECK(b.value(3) == 2);  // v^{n+1} = v^n
  CHECK(b.f(0, 1) == 0);
  CHECK(b.f(0, 2) == 0);
  CHECK(b.f(2, 2) == Rational(1, 4));
  CHECK_THROWS_AS(b.f(3, 1), IndexError);
  CHECK_THROWS_AS(inst.bidder(3), IndexError);
}

TEST_CASE("flat index order is null, then levels with day1 before day2") {
  CHECK(flat_index({0, 1}) == 0);
  CHECK(flat_index({1, 1}) == 1);
  CHECK(flat_index({1, 2}) == 2);
  CHECK(flat_index({2, 1}) == 3);
  CHECK(flat_index({2, 2}) == 4);
  for (int t = 0; t <= 10; ++t) CHECK(flat_index(label_of(t)) == t);
  CHECK(label_of(0).is_null());
  CHECK_THROWS_AS(label_of(-1), IndexError);
}

TEST_CASE("reverse mass telescopes against the density") {
  Instance inst = make_instance(uniform_two_level(), uniform_two_level());
  CHECK(reverse_mass(inst, 1, 1, 1) == Rational(1, 2));
  CHECK(reverse_mass(inst, 1, 2, 1) == Rational(1, 4));
  CHECK(reverse_mass(inst, 1, 3, 1) == 0);  // R at n+1 is empty
  for (int j = 1; j <= 2; ++j)
    for (int k = 1; k <= 2; ++k)
      CHECK(reverse_mass(inst, 1, k, j) - reverse_mass(inst, 1, k + 1, j) ==
            inst.bidder(1).f(k, j));
  CHECK_THROWS_AS(reverse_mass(inst, 1, 0, 1), IndexError);
  CHECK_THROWS_AS(reverse_mass(inst, 1, 4, 1), IndexError);
}

TEST_CASE("dense rational matrices multiply exactly") {
  RatMatrix a(2, 2), b(2, 2);
  a << Rational(1, 2), Rational(1, 3), Rational(1, 4), Rational(1, 5);
  b << Rational(2), Rational(0), Rational(0), Rational(3);
  RatMatrix c = a * b;
  CHECK(c(0, 0) == Rational(1));
  CHECK(c(0, 1) == Rational(1));
  CHECK(c(1, 0) == Rational(1, 2));
  CHECK(c(1, 1) == Rational(3, 5));
  RatVector v(2);
  v << Rational(1), Rational(-1);
  RatVector w = b * v;
  CHECK(w(0) == Rational(2));
  CHECK(w(1) == Rational(-3));
}
