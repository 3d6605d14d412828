#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "auctionlab/errors.hpp"
#include "auctionlab/lp.hpp"
#include "auctionlab/mechanism.hpp"
#include "auctionlab/reduction.hpp"

using namespace auctionlab;

namespace {

Instance uniform_day1_pair() {
  BidderSpec b;
  b.n = 2;
  b.values = {Rational(5), Rational(6)};
  b.probs[0] = {Rational(1, 2), Rational(1, 2)};
  b.probs[1] = {Rational(0), Rational(0)};
  return make_instance(b, b);
}

bool mat_eq(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index r = 0; r < a.rows(); ++r)
    for (Eigen::Index c = 0; c < a.cols(); ++c)
      if (a(r, c) != b(r, c)) return false;
  return true;
}

}  // namespace

TEST_CASE("hand-built programs") {
  {
    // max 2x + y over the unit square cut by x + y <= 3/2
    LinearProgram lp;
    int x = lp.add_var("x", Rational(0), Rational(1), Rational(2));
    int y = lp.add_var("y", Rational(0), Rational(1), Rational(1));
    lp.rows.push_back({"cap", {{x, Rational(1)}, {y, Rational(1)}}, RowSense::LE, Rational(3, 2)});
    LpSolution s = solve_exact(lp);
    CHECK(s.value == Rational(5, 2));
    CHECK(s.x[x] == Rational(1));
    CHECK(s.x[y] == Rational(1, 2));
  }
  {
    // equality row exercises the feasibility phase
    LinearProgram lp;
    int x = lp.add_var("x", Rational(0), Rational(1), Rational(1));
    int y = lp.add_var("y", Rational(0), Rational(1), Rational(1));
    lp.rows.push_back({"pin", {{x, Rational(1)}, {y, Rational(1)}}, RowSense::EQ, Rational(3, 2)});
    CHECK(solve_exact(lp).value == Rational(3, 2));
  }
  {
    LinearProgram lp;
    int x = lp.add_var("x", Rational(0), Rational(1), Rational(1));
    lp.rows.push_back({"far", {{x, Rational(1)}}, RowSense::GE, Rational(2)});
    CHECK_THROWS_AS(solve_exact(lp), InfeasibleError);
  }
  {
    LinearProgram lp;
    lp.add_var("x", Rational(0), std::nullopt, Rational(1));
    CHECK_THROWS_AS(solve_exact(lp), UnboundedError);
  }
  {
    // negative lower bounds and a GE row with negative slack direction
    LinearProgram lp;
    int x = lp.add_var("x", Rational(-3), Rational(3), Rational(-1));
    lp.rows.push_back({"floor", {{x, Rational(2)}}, RowSense::GE, Rational(-4)});
    LpSolution s = solve_exact(lp);
    CHECK(s.value == Rational(2));
    CHECK(s.x[x] == Rational(-2));
  }
}

TEST_CASE("a classic cycling program terminates at its optimum") {
  // Beale's example: the steepest-descent pivot rule cycles on this program
  // unless the solver switches rules after a degenerate streak.
  LinearProgram lp;
  int x1 = lp.add_var("x1", Rational(0), std::nullopt, Rational(3, 4));
  int x2 = lp.add_var("x2", Rational(0), std::nullopt, Rational(-150));
  int x3 = lp.add_var("x3", Rational(0), std::nullopt, Rational(1, 50));
  int x4 = lp.add_var("x4", Rational(0), std::nullopt, Rational(-6));
  lp.rows.push_back({"r1",
                     {{x1, Rational(1, 4)}, {x2, Rational(-60)}, {x3, Rational(-1, 25)},
                      {x4, Rational(9)}},
                     RowSense::LE, Rational(0)});
  lp.rows.push_back({"r2",
                     {{x1, Rational(1, 2)}, {x2, Rational(-90)}, {x3, Rational(-1, 50)},
                      {x4, Rational(3)}},
                     RowSense::LE, Rational(0)});
  lp.rows.push_back({"r3", {{x3, Rational(1)}}, RowSense::LE, Rational(1)});
  LpSolution s = solve_exact(lp);
  CHECK(s.value == Rational(1, 20));
}

TEST_CASE("revenue program shape on the n=2 instance") {
  Instance inst = build_instance(disj_input_from_strings("10", "10"), nullptr);
  LinearProgram lp = assemble_lp(inst);
  int x_vars = 0, p_vars = 0, supply_rows = 0, bic_rows = 0;
  for (const std::string& name : lp.col_names) {
    if (name[0] == 'X') ++x_vars;
    if (name[0] == 'p') ++p_vars;
  }
  for (const auto& row : lp.rows) {
    if (row.name.rfind("supply", 0) == 0) ++supply_rows;
    if (row.name.rfind("bic", 0) == 0) ++bic_rows;
  }
  // 8 nontrivial types per bidder: 2 * 8 * 8 allocations, 2 * 8 payments
  CHECK(x_vars == 128);
  CHECK(p_vars == 16);
  CHECK(lp.num_vars() == 144);
  CHECK(supply_rows == 64);
  // per bidder: day-1 truths 4 * (3 + null), day-2 truths 4 * (4 + 3 + null)
  CHECK(bic_rows == 96);
  CHECK(static_cast<int>(lp.rows.size()) == 160);
  std::string text = lp.dump();
  CHECK(text.find("supply(") != std::string::npos);
  CHECK(text.find("<=") != std::string::npos);
}

TEST_CASE("revenue optima on small hand instances") {
  {
    // both bidders always present at value 5: a posted price is optimal
    BidderSpec b;
    b.n = 1;
    b.values = {Rational(5)};
    b.probs[0] = {Rational(1)};
    b.probs[1] = {Rational(0)};
    Instance inst = make_instance(b, b);
    CHECK(solve_exact(assemble_lp(inst)).value == Rational(5));
    CHECK(solve_revenue_lp(inst).value == Rational(5));
  }
  {
    // two uniform {5,6} day-1 bidders: the one-dimensional optimum is 11/2
    Instance inst = uniform_day1_pair();
    LpSolution full = solve_exact(assemble_lp(inst));
    RevenueLpResult reduced = solve_revenue_lp(inst);
    CHECK(full.value == Rational(11, 2));
    CHECK(reduced.value == Rational(11, 2));
    CHECK(revenue(inst, reduced.m) == Rational(11, 2));
    CHECK(bic_violations(inst, reduced.m).passed);
  }
}

TEST_CASE("lazy solve agrees with the full program on reduction instances") {
  for (const char* bits : {"10", "01"}) {
    Instance inst = build_instance(disj_input_from_strings("10", bits), nullptr);
    LpSolution full = solve_exact(assemble_lp(inst));
    RevenueLpResult reduced = solve_revenue_lp(inst);
    CHECK(full.value == reduced.value);
    // the zero-mass extension must be feasible for the full program
    CHECK(bic_violations(inst, reduced.m).passed);
    CHECK(revenue(inst, reduced.m) == reduced.value);
    // an incentive-compatible auction never beats the program optimum
    Mechanism spa = spa_bidder1(inst);
    REQUIRE(bic_violations(inst, spa).passed);
    CHECK(revenue(inst, spa) <= reduced.value);
    CHECK(reduced.solve_rows < static_cast<int>(assemble_lp(inst).rows.size()));
  }
}

TEST_CASE("the reduced solve is deterministic") {
  Instance inst = build_instance(disj_input_from_strings("10", "10"), nullptr);
  RevenueLpResult a = solve_revenue_lp(inst);
  RevenueLpResult b = solve_revenue_lp(inst);
  CHECK(a.value == b.value);
  CHECK(a.pivots == b.pivots);
  CHECK(a.solve_rows == b.solve_rows);
  for (int i = 0; i < 2; ++i) {
    CHECK(mat_eq(a.m.X[i], b.m.X[i]));
    CHECK(mat_eq(a.m.P[i], b.m.P[i]));
  }
}

TEST_CASE("outcome backends") {
  std::vector<int> x(32, 0), y(32, 0);
  x[0] = 1;
  y[1] = 1;
  Instance inst = build_instance(make_disj_input(x, y), nullptr);
  int bottom = flat_index({1, 1});
  CHECK(select_outcome(inst, bottom, bottom, OutcomeBackend::Flow) ==
        OutcomeSupport{true, false, false});

  Instance tiny = build_instance(disj_input_from_strings("10", "10"), nullptr);
  CHECK_THROWS_AS(select_outcome(tiny, bottom, bottom, OutcomeBackend::Flow),
                  BackendUnavailableError);

  // at reports (6, 5) any revenue-optimal allocation gives Bidder One the
  // whole item: the virtual-surplus bound is tight only there
  Instance pair = uniform_day1_pair();
  OutcomeSupport lp_out = select_outcome(pair, flat_index({2, 1}), flat_index({1, 1}),
                                         OutcomeBackend::Lp);
  CHECK(lp_out == OutcomeSupport{true, false, false});
}
