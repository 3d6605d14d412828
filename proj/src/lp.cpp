#include "auctionlab/lp.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "auctionlab/errors.hpp"
#include "auctionlab/linalg.hpp"

namespace auctionlab {

int LinearProgram::add_var(const std::string& name, Rational lo, std::optional<Rational> hi,
                           Rational obj) {
  if (hi && *hi < lo) throw ShapeError("variable upper bound below lower bound: " + name);
  col_names.push_back(name);
  lower.push_back(std::move(lo));
  upper.push_back(std::move(hi));
  objective.push_back(std::move(obj));
  return num_vars() - 1;
}

std::string LinearProgram::dump() const {
  std::ostringstream out;
  out << "maximize:";
  for (int j = 0; j < num_vars(); ++j)
    if (objective[j] != 0) out << " " << render_rational(objective[j]) << "*" << col_names[j];
  out << "\n";
  for (const Row& row : rows) {
    out << row.name << ":";
    for (const auto& [col, coef] : row.terms)
      out << " " << render_rational(coef) << "*" << col_names[col];
    out << (row.sense == RowSense::LE ? " <= " : row.sense == RowSense::GE ? " >= " : " == ")
        << render_rational(row.rhs) << "\n";
  }
  for (int j = 0; j < num_vars(); ++j) {
    out << "bound " << col_names[j] << ": " << render_rational(lower[j]) << " <= "
        << col_names[j];
    if (upper[j]) out << " <= " << render_rational(*upper[j]);
    out << "\n";
  }
  return out.str();
}

namespace {

enum class VarStatus { Basic, AtLower, AtUpper };

// Bounded-variable primal simplex over an exact dense tableau. Variables are
// shifted so every lower bound is 0; `cap` holds the (optional) width of each
// variable's box. Rows arrive as equalities with slack columns already added.
struct Tableau {
  RatMatrix D;                               // B^{-1} A
  std::vector<Rational> xB;                  // values of basic variables
  std::vector<int> basis;                    // variable per row
  std::vector<VarStatus> status;
  std::vector<std::optional<Rational>> cap;  // box width; nullopt = unbounded
  std::vector<Rational> z;                   // reduced costs for current objective
  Rational objval;
  long long pivots = 0;
  long long degenerate_streak = 0;
  bool bland = false;
  int first_artificial;                      // columns at or past this never re-enter

  int rows() const { return static_cast<int>(basis.size()); }
  int cols() const { return static_cast<int>(status.size()); }

  Rational value_of(int j) const {
    if (status[j] == VarStatus::AtLower) return Rational(0);
    if (status[j] == VarStatus::AtUpper) return *cap[j];
    for (int r = 0; r < rows(); ++r)
      if (basis[r] == j) return xB[r];
    throw Error("tableau: basic variable missing from basis");
  }

  void set_objective(const std::vector<Rational>& c) {
    z = c;
    objval = 0;
    for (int r = 0; r < rows(); ++r) {
      const Rational& cb = c[basis[r]];
      objval += cb * xB[r];
      if (cb == 0) continue;
      for (int j = 0; j < cols(); ++j)
        if (D(r, j) != 0) z[j] -= cb * D(r, j);
    }
    for (int j = 0; j < cols(); ++j)
      if (status[j] == VarStatus::AtUpper) objval += c[j] * *cap[j];
  }

  // Returns false at optimality, throws UnboundedError when the improving ray
  // is free. One bound flip or basis exchange otherwise.
  bool step() {
    int enter = -1;
    Rational best(0);
    for (int j = 0; j < cols(); ++j) {
      if (status[j] == VarStatus::Basic || j >= first_artificial) continue;
      if (cap[j] && *cap[j] == 0) continue;  // fixed variable
      Rational gain = status[j] == VarStatus::AtLower ? z[j] : -z[j];
      if (gain <= 0) continue;
      if (bland) {
        enter = j;
        break;
      }
      if (gain > best) {
        best = gain;
        enter = j;
      }
    }
    if (enter < 0) return false;

    const int sigma = status[enter] == VarStatus::AtLower ? 1 : -1;
    // ratio test; a tie with the entering variable's own box keeps the flip
    std::optional<Rational> limit = cap[enter];
    int leave_row = -1;
    for (int r = 0; r < rows(); ++r) {
      Rational d = sigma * D(r, enter);
      Rational t;
      if (d > 0)
        t = xB[r] / d;  // basic variable dropping to its lower bound
      else if (d < 0 && cap[basis[r]])
        t = (*cap[basis[r]] - xB[r]) / -d;  // basic variable hitting its cap
      else
        continue;
      if (!limit || t < *limit) {
        limit = t;
        leave_row = r;
      } else if (t == *limit && leave_row >= 0 && basis[r] < basis[leave_row]) {
        leave_row = r;
      }
    }
    if (!limit) throw UnboundedError("objective unbounded above");
    const Rational t = *limit;

    objval += (sigma > 0 ? z[enter] : -z[enter]) * t;
    ++pivots;
    if (t == 0)
      ++degenerate_streak;
    else
      degenerate_streak = 0;
    if (!bland && degenerate_streak > rows()) bland = true;

    if (leave_row < 0) {
      // bound flip across the whole box
      for (int r = 0; r < rows(); ++r)
        if (D(r, enter) != 0) xB[r] -= sigma * t * D(r, enter);
      status[enter] = sigma > 0 ? VarStatus::AtUpper : VarStatus::AtLower;
      return true;
    }

    for (int r = 0; r < rows(); ++r)
      if (r != leave_row && D(r, enter) != 0) xB[r] -= sigma * t * D(r, enter);
    const int leave = basis[leave_row];
    status[leave] =
        sigma * D(leave_row, enter) > 0 ? VarStatus::AtLower : VarStatus::AtUpper;
    xB[leave_row] = sigma > 0 ? t : *cap[enter] - t;

    const Rational piv = D(leave_row, enter);
    for (int j = 0; j < cols(); ++j)
      if (D(leave_row, j) != 0) D(leave_row, j) /= piv;
    for (int r = 0; r < rows(); ++r) {
      if (r == leave_row) continue;
      const Rational factor = D(r, enter);
      if (factor == 0) continue;
      for (int j = 0; j < cols(); ++j)
        if (D(leave_row, j) != 0) D(r, j) -= factor * D(leave_row, j);
    }
    const Rational zfac = z[enter];
    if (zfac != 0)
      for (int j = 0; j < cols(); ++j)
        if (D(leave_row, j) != 0) z[j] -= zfac * D(leave_row, j);
    basis[leave_row] = enter;
    status[enter] = VarStatus::Basic;
    return true;
  }

  void run() {
    while (step()) {
    }
  }
};

}  // namespace

LpSolution solve_exact(const LinearProgram& lp) {
  const int n = lp.num_vars();
  if (static_cast<int>(lp.objective.size()) != n || static_cast<int>(lp.lower.size()) != n ||
      static_cast<int>(lp.upper.size()) != n)
    throw ShapeError("linear program arrays disagree on variable count");
  for (int j = 0; j < n; ++j)
    if (lp.upper[j] && *lp.upper[j] < lp.lower[j])
      throw InfeasibleError("empty box for " + lp.col_names[j]);
  const int m = static_cast<int>(lp.rows.size());

  // Shift to x' = x - lower, normalize senses to <=, express as equalities
  // with slack columns, then flip rows so every right side is nonnegative.
  std::vector<Rational> rhs(m);
  std::vector<std::vector<std::pair<int, Rational>>> terms(m);
  for (int r = 0; r < m; ++r) {
    const auto& row = lp.rows[r];
    Rational b = row.rhs;
    std::vector<std::pair<int, Rational>> t;
    for (const auto& [col, coef] : row.terms) {
      if (col < 0 || col >= n) throw ShapeError("row references unknown column");
      if (coef == 0) continue;
      b -= coef * lp.lower[col];
      t.emplace_back(col, row.sense == RowSense::GE ? -coef : coef);
    }
    rhs[r] = row.sense == RowSense::GE ? Rational(-b) : b;
    terms[r] = std::move(t);
  }

  const int num_slack = m;  // equality rows get a fixed (cap 0) slack
  int cols = n + num_slack;
  Tableau tb;
  tb.first_artificial = cols;  // provisional; artificials appended below
  tb.cap.resize(cols);
  tb.status.assign(cols, VarStatus::AtLower);
  for (int j = 0; j < n; ++j)
    tb.cap[j] = lp.upper[j] ? std::optional<Rational>(*lp.upper[j] - lp.lower[j]) : std::nullopt;
  for (int r = 0; r < m; ++r)
    tb.cap[n + r] = lp.rows[r].sense == RowSense::EQ ? std::optional<Rational>(Rational(0))
                                                     : std::nullopt;

  std::vector<int> art_for_row(m, -1);
  int num_art = 0;
  for (int r = 0; r < m; ++r)
    if (rhs[r] < 0 || lp.rows[r].sense == RowSense::EQ) ++num_art;

  tb.D = RatMatrix::Constant(m, cols + num_art, Rational(0));
  tb.xB.assign(m, Rational(0));
  tb.basis.assign(m, -1);
  tb.first_artificial = cols;
  for (int r = 0; r < m; ++r) {
    Rational flip = rhs[r] < 0 ? Rational(-1) : Rational(1);
    for (const auto& [col, coef] : terms[r]) tb.D(r, col) = flip * coef;
    tb.D(r, n + r) = flip;  // slack
    Rational b = flip * rhs[r];
    if (rhs[r] < 0 || lp.rows[r].sense == RowSense::EQ) {
      int a = cols++;
      art_for_row[r] = a;
      tb.D(r, a) = 1;
      tb.basis[r] = a;
    } else {
      tb.basis[r] = n + r;
    }
    tb.xB[r] = b;
  }
  tb.cap.resize(cols);
  tb.status.resize(cols, VarStatus::AtLower);
  for (int r = 0; r < m; ++r) {
    tb.status[tb.basis[r]] = VarStatus::Basic;
    if (art_for_row[r] >= 0) tb.cap[art_for_row[r]] = std::nullopt;
  }

  long long total_pivots = 0;
  if (cols > tb.first_artificial) {
    std::vector<Rational> phase1(cols, Rational(0));
    for (int r = 0; r < m; ++r)
      if (art_for_row[r] >= 0) phase1[art_for_row[r]] = Rational(-1);
    // let slacks of flipped/equality rows participate normally; artificials
    // may leave but never re-enter (first_artificial gate)
    tb.set_objective(phase1);
    tb.run();
    total_pivots += tb.pivots;
    if (tb.objval != 0) throw InfeasibleError("no feasible point");
    // drive leftover artificials out of the basis; rows with no real pivot
    // entry are redundant and get their artificial pinned at zero
    for (int r = 0; r < m; ++r) {
      int bvar = tb.basis[r];
      if (bvar < tb.first_artificial) continue;
      int enter = -1;
      for (int j = 0; j < tb.first_artificial && enter < 0; ++j)
        if (tb.status[j] == VarStatus::AtLower && tb.D(r, j) != 0 &&
            !(tb.cap[j] && *tb.cap[j] == 0))
          enter = j;
      if (enter < 0) continue;
      const Rational piv = tb.D(r, enter);
      for (int j = 0; j < tb.cols(); ++j)
        if (tb.D(r, j) != 0) tb.D(r, j) /= piv;
      for (int rr = 0; rr < m; ++rr) {
        if (rr == r) continue;
        const Rational factor = tb.D(rr, enter);
        if (factor == 0) continue;
        for (int j = 0; j < tb.cols(); ++j)
          if (tb.D(r, j) != 0) tb.D(rr, j) -= factor * tb.D(r, j);
      }
      // the departing artificial and the entering variable both sit at 0
      tb.status[bvar] = VarStatus::AtLower;
      tb.cap[bvar] = Rational(0);
      tb.status[enter] = VarStatus::Basic;
      tb.basis[r] = enter;
      tb.xB[r] = 0;
    }
    for (int r = 0; r < m; ++r)
      if (tb.basis[r] >= tb.first_artificial) tb.cap[tb.basis[r]] = Rational(0);
    tb.pivots = 0;
    tb.degenerate_streak = 0;
    tb.bland = false;
  }

  std::vector<Rational> phase2(cols, Rational(0));
  for (int j = 0; j < n; ++j) phase2[j] = lp.objective[j];
  tb.set_objective(phase2);
  tb.run();
  total_pivots += tb.pivots;

  LpSolution sol;
  sol.pivots = total_pivots;
  sol.x.resize(n);
  sol.value = 0;
  for (int j = 0; j < n; ++j) {
    sol.x[j] = lp.lower[j] + tb.value_of(j);
    sol.value += lp.objective[j] * sol.x[j];
  }
  return sol;
}

namespace {

std::string tname(const BidderTypeLabel& t) {
  return std::to_string(t.k) + "." + std::to_string(t.j);
}

// Shared variable layout for the revenue LP over a chosen set of flat type
// indices per bidder (always excluding null).
struct RevenueVars {
  std::vector<int> types1, types2;       // flat indices in play
  std::vector<int> xcol1, xcol2;         // profile -> column, row-major over (pos1, pos2)
  std::vector<int> pcol1, pcol2;         // position -> column
  int o1(int pos1, int pos2) const { return xcol1[pos1 * types2.size() + pos2]; }
  int o2(int pos1, int pos2) const { return xcol2[pos1 * types2.size() + pos2]; }
};

RevenueVars layout_vars(const Instance& inst, LinearProgram& lp, bool positive_mass_only) {
  RevenueVars vars;
  for (int i = 1; i <= 2; ++i) {
    const BidderSpec& spec = inst.bidder(i);
    auto& list = i == 1 ? vars.types1 : vars.types2;
    for (int t = 1; t < spec.num_types(); ++t)
      if (!positive_mass_only || spec.f(label_of(t)) > 0) list.push_back(t);
  }
  for (int which = 0; which < 2; ++which) {
    auto& cols = which == 0 ? vars.xcol1 : vars.xcol2;
    for (int t1 : vars.types1)
      for (int t2 : vars.types2)
        cols.push_back(lp.add_var("X" + std::to_string(which + 1) + "(" + tname(label_of(t1)) +
                                      "|" + tname(label_of(t2)) + ")",
                                  Rational(0), Rational(1), Rational(0)));
  }
  for (int t : vars.types1)
    vars.pcol1.push_back(
        lp.add_var("p1(" + tname(label_of(t)) + ")", Rational(0), std::nullopt,
                   inst.bidder(1).f(label_of(t))));
  for (int t : vars.types2)
    vars.pcol2.push_back(
        lp.add_var("p2(" + tname(label_of(t)) + ")", Rational(0), std::nullopt,
                   inst.bidder(2).f(label_of(t))));
  return vars;
}

void add_supply_rows(LinearProgram& lp, const RevenueVars& vars) {
  for (size_t a = 0; a < vars.types1.size(); ++a)
    for (size_t b = 0; b < vars.types2.size(); ++b) {
      LinearProgram::Row row;
      row.name = "supply(" + tname(label_of(vars.types1[a])) + "|" +
                 tname(label_of(vars.types2[b])) + ")";
      row.terms = {{vars.o1(a, b), Rational(1)}, {vars.o2(a, b), Rational(1)}};
      row.sense = RowSense::LE;
      row.rhs = Rational(1);
      lp.rows.push_back(std::move(row));
    }
}

// One incentive row: truthful utility of `truth` minus utility of taking
// `rep`'s menu entry (rep.k = 0 is the null report), as a >= 0 row.
LinearProgram::Row bic_row(const Instance& inst, const RevenueVars& vars, int bidder,
                           BidderTypeLabel truth, BidderTypeLabel rep) {
  const BidderSpec& own = inst.bidder(bidder);
  const BidderSpec& opp = inst.bidder(3 - bidder);
  const auto& own_types = bidder == 1 ? vars.types1 : vars.types2;
  const auto& opp_types = bidder == 1 ? vars.types2 : vars.types1;
  const auto& pcol = bidder == 1 ? vars.pcol1 : vars.pcol2;
  const Rational v = own.value(truth.k);

  auto pos_of = [&](int flat) {
    auto it = std::lower_bound(own_types.begin(), own_types.end(), flat);
    return static_cast<int>(it - own_types.begin());
  };
  const int tpos = pos_of(flat_index(truth));
  const int rpos = rep.is_null() ? -1 : pos_of(flat_index(rep));

  LinearProgram::Row row;
  row.name = "bic" + std::to_string(bidder) + "(" + tname(truth) + "->" +
             (rep.is_null() ? std::string("null") : tname(rep)) + ")";
  row.sense = RowSense::GE;
  row.rhs = Rational(0);
  for (size_t s = 0; s < opp_types.size(); ++s) {
    Rational w = opp.f(label_of(opp_types[s]));
    if (w == 0) continue;
    auto xcol = [&](int pos) {
      return bidder == 1 ? vars.o1(pos, s) : vars.o2(s, pos);
    };
    row.terms.emplace_back(xcol(tpos), w * v);
    if (rpos >= 0) row.terms.emplace_back(xcol(rpos), -w * v);
  }
  row.terms.emplace_back(pcol[tpos], Rational(-1));
  if (rpos >= 0) row.terms.emplace_back(pcol[rpos], Rational(1));
  return row;
}

void for_each_bic(const Instance& inst, const std::vector<int>& types, int bidder,
                  const std::function<void(BidderTypeLabel, BidderTypeLabel)>& fn) {
  std::vector<bool> present(inst.bidder(bidder).num_types(), false);
  for (int t : types) present[t] = true;
  for (int t : types) {
    BidderTypeLabel truth = label_of(t);
    fn(truth, BidderTypeLabel{0, 1});
    for (int jj = 1; jj <= truth.j; ++jj)
      for (int kk = 1; kk <= inst.bidder(bidder).n; ++kk) {
        BidderTypeLabel rep{kk, jj};
        if (rep == truth || !present[flat_index(rep)]) continue;
        fn(truth, rep);
      }
  }
}

}  // namespace

LinearProgram assemble_lp(const Instance& inst) {
  LinearProgram lp;
  RevenueVars vars = layout_vars(inst, lp, /*positive_mass_only=*/false);
  add_supply_rows(lp, vars);
  for (int i = 1; i <= 2; ++i)
    for_each_bic(inst, i == 1 ? vars.types1 : vars.types2, i,
                 [&](BidderTypeLabel truth, BidderTypeLabel rep) {
                   lp.rows.push_back(bic_row(inst, vars, i, truth, rep));
                 });
  return lp;
}

RevenueLpResult solve_revenue_lp(const Instance& inst) {
  LinearProgram lp;
  RevenueVars vars = layout_vars(inst, lp, /*positive_mass_only=*/true);
  add_supply_rows(lp, vars);

  // seed with the ladder constraints (null, adjacent levels, same-level
  // cross-interest); the full quantifier is enforced by the lazy loop below
  std::set<std::pair<int, std::pair<int, int>>> have;  // (bidder, (truth flat, rep flat))
  auto add_row = [&](int bidder, BidderTypeLabel truth, BidderTypeLabel rep) {
    int rflat = rep.is_null() ? 0 : flat_index(rep);
    if (!have.insert({bidder, {flat_index(truth), rflat}}).second) return;
    lp.rows.push_back(bic_row(inst, vars, bidder, truth, rep));
  };
  for (int i = 1; i <= 2; ++i) {
    const auto& types = i == 1 ? vars.types1 : vars.types2;
    std::vector<bool> present(inst.bidder(i).num_types(), false);
    for (int t : types) present[t] = true;
    auto maybe = [&](BidderTypeLabel truth, BidderTypeLabel rep) {
      if (!rep.is_null() && !present[flat_index(rep)]) return;
      if (rep == truth) return;
      add_row(i, truth, rep);
    };
    for (int t : types) {
      BidderTypeLabel truth = label_of(t);
      maybe(truth, {0, 1});
      for (int jj = 1; jj <= truth.j; ++jj) {
        maybe(truth, {truth.k - 1 >= 1 ? truth.k - 1 : 0, jj});
        if (truth.k + 1 <= inst.bidder(i).n) maybe(truth, {truth.k + 1, jj});
        maybe(truth, {truth.k, jj});
      }
    }
  }

  LpSolution sol;
  long long pivots = 0;
  while (true) {
    sol = solve_exact(lp);
    pivots += sol.pivots;
    // scan the full incentive quantifier for violations
    int added = 0;
    for (int i = 1; i <= 2; ++i)
      for_each_bic(inst, i == 1 ? vars.types1 : vars.types2, i,
                   [&](BidderTypeLabel truth, BidderTypeLabel rep) {
                     LinearProgram::Row row = bic_row(inst, vars, i, truth, rep);
                     Rational lhs(0);
                     for (const auto& [col, coef] : row.terms) lhs += coef * sol.x[col];
                     if (lhs < 0) {
                       int rflat = rep.is_null() ? 0 : flat_index(rep);
                       if (have.insert({i, {flat_index(truth), rflat}}).second) {
                         lp.rows.push_back(std::move(row));
                         ++added;
                       }
                     }
                   });
    if (added == 0) break;
  }

  // Rebuild as a full ex-post mechanism; zero-mass types copy their most
  // attractive legal target (argmax of v * pi - p; the null report backstops
  // at utility 0).
  const BidderSpec& one = inst.bidder(1);
  const BidderSpec& two = inst.bidder(2);
  Mechanism m;
  for (int i = 0; i < 2; ++i) {
    m.X[i] = RatMatrix::Constant(one.num_types(), two.num_types(), Rational(0));
    m.P[i] = RatMatrix::Constant(one.num_types(), two.num_types(), Rational(0));
  }
  for (size_t a = 0; a < vars.types1.size(); ++a)
    for (size_t b = 0; b < vars.types2.size(); ++b) {
      m.X[0](vars.types1[a], vars.types2[b]) = sol.x[vars.o1(a, b)];
      m.X[1](vars.types1[a], vars.types2[b]) = sol.x[vars.o2(a, b)];
    }

  std::vector<std::vector<Rational>> pay(2);
  pay[0].assign(one.num_types(), Rational(0));
  pay[1].assign(two.num_types(), Rational(0));
  for (size_t a = 0; a < vars.types1.size(); ++a) pay[0][vars.types1[a]] = sol.x[vars.pcol1[a]];
  for (size_t b = 0; b < vars.types2.size(); ++b) pay[1][vars.types2[b]] = sol.x[vars.pcol2[b]];

  for (int i = 1; i <= 2; ++i) {
    const BidderSpec& own = inst.bidder(i);
    const BidderSpec& opp = inst.bidder(3 - i);
    const auto& own_present = i == 1 ? vars.types1 : vars.types2;
    std::vector<bool> present(own.num_types(), false);
    for (int t : own_present) present[t] = true;
    // interim allocation of present types, for scoring deviation targets
    std::vector<Rational> pi(own.num_types(), Rational(0));
    for (int t : own_present)
      for (int s = 1; s < opp.num_types(); ++s) {
        Rational w = opp.f(label_of(s));
        if (w == 0) continue;
        pi[t] += w * (i == 1 ? m.X[0](t, s) : m.X[1](s, t));
      }
    for (int t = 1; t < own.num_types(); ++t) {
      if (present[t]) continue;
      BidderTypeLabel lt = label_of(t);
      int best = 0;  // null target
      Rational best_u(0);
      for (int s : own_present) {
        BidderTypeLabel ls = label_of(s);
        if (ls.j > lt.j) continue;
        Rational u = own.value(lt.k) * pi[s] - pay[i - 1][s];
        if (u > best_u) {
          best_u = u;
          best = s;
        }
      }
      pay[i - 1][t] = best == 0 ? Rational(0) : pay[i - 1][best];
      if (best != 0) {
        if (i == 1) {
          for (int c = 0; c < two.num_types(); ++c) {
            m.X[0](t, c) = m.X[0](best, c);
            m.X[1](t, c) = m.X[1](best, c);
          }
        } else {
          for (int r = 0; r < one.num_types(); ++r) {
            m.X[0](r, t) = m.X[0](r, best);
            m.X[1](r, t) = m.X[1](r, best);
          }
        }
      }
    }
  }
  for (int t1 = 1; t1 < one.num_types(); ++t1)
    for (int t2 = 1; t2 < two.num_types(); ++t2) {
      m.P[0](t1, t2) = pay[0][t1];
      m.P[1](t1, t2) = pay[1][t2];
    }

  RevenueLpResult out;
  out.value = sol.value;
  out.m = std::move(m);
  out.pivots = pivots;
  out.solve_rows = static_cast<int>(lp.rows.size());
  return out;
}

OutcomeSupport select_outcome(const Instance& inst, int flat1, int flat2,
                              OutcomeBackend backend) {
  if (backend == OutcomeBackend::Flow) {
    CertifiedAuction cert = certify_auction(inst);
    if (!cert.certified)
      throw BackendUnavailableError("flow pipeline failed to certify this instance");
    return outcome_at(cert.m, flat1, flat2);
  }
  return outcome_at(solve_revenue_lp(inst).m, flat1, flat2);
}

}  // namespace auctionlab
