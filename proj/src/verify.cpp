#include "auctionlab/verify.hpp"

#include <random>
#include <set>
#include <string>

#include "auctionlab/flow.hpp"
#include "auctionlab/mechanism.hpp"

namespace auctionlab {

bool Suite::pass() const {
  for (const CheckLine& line : lines)
    if (!line.pass) return false;
  return true;
}

void Suite::add(const std::string& name, bool ok, const std::string& detail) {
  lines.push_back(CheckLine{name, ok, ok ? "" : detail});
}

namespace {

std::string at(int i) { return "i=" + std::to_string(i); }

Rational pow_rat(int base, int exp) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exp));
  return Rational(p);
}

// Every z-sequence claim quantifies over the recurrence indices i in [1, n]
// (levels i+1 against i+2) or [1, n+1] for ranges; tr.z[k-2] holds z_k.
struct ZView {
  const std::vector<Rational>& z;
  Rational operator()(int k) const { return z[k - 2]; }
};

}  // namespace

Suite check_reduction(const DisjInput& in) {
  Suite suite;
  const int n = in.n();
  ReductionTrace tr;
  Instance inst = build_instance(in, &tr);
  const Rational a = tr.a;
  const Rational n2 = pow_rat(n, 2), n3 = pow_rat(n, 3);

  Rational mass_c(0), mass_d(0), mass_e(0), mass_e2(0);
  for (int k = 1; k <= n + 2; ++k) {
    mass_c += inst.bidder(1).f(k, 1);
    mass_d += inst.bidder(1).f(k, 2);
    mass_e += inst.bidder(2).f(k, 1);
    mass_e2 += inst.bidder(2).f(k, 2);
  }
  suite.add("reduction/mass-day1-half", mass_c == Rational(1, 2));
  suite.add("reduction/mass-day2-half", mass_d == Rational(1, 2));
  suite.add("reduction/mass-bidder2-one", mass_e == 1);
  suite.add("reduction/mass-bidder2-day2-zero", mass_e2 == 0);

  ZView zc{tr.c.z}, zd{tr.d.z}, ze{tr.e.z};
  suite.add("reduction/z-start-day1", zc(2) == a);
  suite.add("reduction/z-start-day2", zd(2) == a);
  suite.add("reduction/z-start-bidder2", ze(2) == a + make_rational(1, n + 1));

  {
    bool ok = true;
    std::string where;
    for (int k = 2; k <= n + 2 && ok; ++k)
      if (Rational(tr.c.scaled[k - 1]) < a - 2 * n3 || Rational(tr.c.scaled[k - 1]) > a + 2 * n3) {
        ok = false;
        where = at(k);
      }
    suite.add("reduction/scaled-range-day1", ok, where);
  }
  {
    bool ok = true;
    std::string where;
    for (int k = 2; k <= n + 2 && ok; ++k)
      if (Rational(tr.d.scaled[k - 1]) < a - n3 || Rational(tr.d.scaled[k - 1]) > a + n3) {
        ok = false;
        where = at(k);
      }
    suite.add("reduction/scaled-range-day2", ok, where);
  }
  {
    bool ok = true;
    std::string where;
    for (int k = 2; k <= n + 2 && ok; ++k)
      if (Rational(tr.e.scaled[k - 1]) < a - 2 * n3 || Rational(tr.e.scaled[k - 1]) > a + 2 * n3) {
        ok = false;
        where = at(k);
      }
    suite.add("reduction/scaled-range-bidder2", ok, where);
  }
  {
    bool ok = true;
    std::string where;
    for (int k = 2; k <= n + 2 && ok; ++k)
      if (inst.bidder(2).f(1, 1) >= inst.bidder(2).f(k, 1)) {
        ok = false;
        where = at(k);
      }
    suite.add("reduction/low-type-mass-minimal", ok, where);
  }
  {
    bool all_zero = true;
    for (int bit : in.x) all_zero = all_zero && bit == 0;
    if (all_zero) suite.add("reduction/day2-equals-day1-on-empty", tr.d.scaled == tr.c.scaled);
  }

  // strict=false allows exact level repeats: a ceil pick at an integral water
  // level consumes exactly z, so z^d can stay flat across one step
  auto gap_checks = [&](const std::string& prefix, const ZView& z, const Rational& slack,
                        bool strict, const Rational& range_lo, const Rational& range_hi) {
    bool mono = true;
    std::string mono_where;
    for (int i = 1; i <= n; ++i) {
      bool step_ok = strict ? z(i + 2) < z(i + 1) + slack : z(i + 2) <= z(i + 1) + slack;
      if (!step_ok) {
        mono = false;
        mono_where = at(i);
      }
    }
    std::string kind = slack != 0 ? "-nearly-monotone" : (strict ? "-monotone" : "-nonincreasing");
    suite.add("reduction/helper-" + prefix + kind, mono, mono_where);
    bool range = true;
    std::string range_where;
    for (int i = 1; i <= n + 1; ++i)
      if (z(i + 1) < range_lo || z(i + 1) > range_hi) {
        range = false;
        range_where = at(i);
      }
    suite.add("reduction/helper-" + prefix + "-range", range, range_where);
  };

  gap_checks("zc", zc, Rational(0), true, a - n3, a);
  gap_checks("zd", zd, Rational(0), false, a - n3, a);
  gap_checks("ze", ze, Rational(2), true, a - 2 * n2, a + 2 * n2);

  {
    bool ok = true;
    std::string where;
    for (int i = 1; i <= n && ok; ++i)
      if (!(zc(i + 1) - zc(i + 2) <= n3 / Rational((n - i + 2) * (n - i + 1)))) {
        ok = false;
        where = at(i);
      }
    suite.add("reduction/helper-zc-gap", ok, where);
  }
  {
    bool ok_free = true, ok_tied = true, ok_water = true;
    std::string w_free, w_tied, w_water;
    for (int i = 1; i <= n; ++i) {
      Rational gap = zd(i + 1) - zd(i + 2);
      if (in.x[i - 1] == 0 && !(gap <= n3 / Rational((n - i + 2) * (n - i + 1)))) {
        ok_free = false;
        w_free = at(i);
      }
      if (in.x[i - 1] == 1 && !(gap <= make_rational(1, n - i + 1))) {
        ok_tied = false;
        w_tied = at(i);
      }
      if (!(Rational(tr.d.scaled[i]) >= zd(i + 2))) {
        ok_water = false;
        w_water = at(i);
      }
    }
    suite.add("reduction/helper-zd-gap-when-zero", ok_free, w_free);
    suite.add("reduction/helper-zd-gap-when-one", ok_tied, w_tied);
    suite.add("reduction/helper-zd-water-level", ok_water, w_water);
  }
  {
    bool ok_one = true, ok_zero = true, ok_water = true;
    std::string w_one, w_zero, w_water;
    for (int i = 1; i <= n; ++i) {
      Rational gap = ze(i + 1) - ze(i + 2);
      if (in.y[i - 1] == 1 && !(gap <= n2 / Rational((n - i + 2) * (n - i + 1)))) {
        ok_one = false;
        w_one = at(i);
      }
      if (in.y[i - 1] == 0 && !(gap <= -make_rational(1, n - i + 1))) {
        ok_zero = false;
        w_zero = at(i);
      }
      if (in.y[i - 1] == 0 && !(Rational(tr.e.scaled[i]) < ze(i + 2))) {
        ok_water = false;
        w_water = at(i);
      }
    }
    suite.add("reduction/helper-ze-gap-when-one", ok_one, w_one);
    suite.add("reduction/helper-ze-drop-when-zero", ok_zero, w_zero);
    suite.add("reduction/helper-ze-water-level", ok_water, w_water);
  }
  return suite;
}

namespace {

struct PhiTables {
  // phi[i-1][j-1][k-1]; reduction instances have full mass except Bidder
  // Two's day 2, whose entries are left at 0 and never read.
  std::vector<std::vector<Rational>> phi1, phi2;
};

PhiTables phi_tables(const Instance& inst, const Flow& fl) {
  PhiTables t;
  int n = inst.bidder(1).n;
  t.phi1.assign(2, std::vector<Rational>(n, Rational(0)));
  t.phi2.assign(2, std::vector<Rational>(n, Rational(0)));
  for (int k = 1; k <= n; ++k) {
    for (int j = 1; j <= 2; ++j) {
      if (auto v = virtual_value(inst, fl, 1, k, j)) t.phi1[j - 1][k - 1] = *v;
      if (j == 1) {
        if (auto v = virtual_value(inst, fl, 2, k, 1)) t.phi2[0][k - 1] = *v;
      }
    }
  }
  return t;
}

void order_bullets(Suite& suite, const std::string& prefix, const Instance& inst,
                   const PhiTables& t) {
  const int n = inst.bidder(1).n;
  bool above = true, below = true;
  std::string w_above, w_below;
  for (int k = 1; k <= n; ++k)
    for (int kk = 1; kk <= n; ++kk)
      for (int j = 1; j <= 2; ++j) {
        if (k > kk && !(t.phi1[j - 1][k - 1] > t.phi2[0][kk - 1])) {
          above = false;
          w_above = "k=" + std::to_string(k) + " j=" + std::to_string(j) +
                    " k'=" + std::to_string(kk);
        }
        if (k < kk && !(t.phi1[j - 1][k - 1] < t.phi2[0][kk - 1])) {
          below = false;
          w_below = "k=" + std::to_string(k) + " j=" + std::to_string(j) +
                    " k'=" + std::to_string(kk);
        }
      }
  suite.add(prefix + "/order-above", above, w_above);
  suite.add(prefix + "/order-below", below, w_below);

  Rational top = inst.bidder(1).value(n);
  suite.add(prefix + "/order-top-equal",
            t.phi1[0][n - 1] == top && t.phi1[1][n - 1] == top && t.phi2[0][n - 1] == top);

  bool positive = true;
  std::string w_pos;
  for (int k = 1; k <= n; ++k)
    for (int j = 1; j <= 2; ++j) {
      if (!(t.phi1[j - 1][k - 1] > 0)) {
        positive = false;
        w_pos = "bidder1 k=" + std::to_string(k) + " j=" + std::to_string(j);
      }
      if (j == 1 && !(t.phi2[0][k - 1] > 0)) {
        positive = false;
        w_pos = "bidder2 k=" + std::to_string(k);
      }
    }
  suite.add(prefix + "/positive", positive, w_pos);
}

}  // namespace

Suite check_canonical(const DisjInput& in) {
  Suite suite;
  const int n = in.n();
  Instance inst = build_instance(in, nullptr);
  Flow fl = canonical_flow(inst);
  suite.add("canonical/flow-valid", is_flow(inst, fl).passed);

  PhiTables t = phi_tables(inst, fl);
  order_bullets(suite, "canonical", inst, t);

  {
    bool free_ok = true, tied_ok = true;
    std::string w_free, w_tied;
    for (int i = 1; i <= n; ++i) {
      // recurrence index i corresponds to level i+1
      bool tied = in.x[i - 1] == 1 && in.y[i - 1] == 1;
      int k = i + 1;
      if (!tied) {
        for (int j = 1; j <= 2; ++j)
          if (!(t.phi1[j - 1][k - 1] > t.phi2[0][k - 1])) {
            free_ok = false;
            w_free = "k=" + std::to_string(k) + " j=" + std::to_string(j);
          }
      } else {
        if (!(t.phi1[0][k - 1] > t.phi2[0][k - 1] && t.phi2[0][k - 1] > t.phi1[1][k - 1])) {
          tied_ok = false;
          w_tied = "k=" + std::to_string(k);
        }
      }
    }
    suite.add("canonical/order-free-level", free_ok, w_free);
    suite.add("canonical/order-tied-level", tied_ok, w_tied);
  }
  suite.add("canonical/order-bottom-level",
            t.phi1[0][0] > t.phi2[0][0] && t.phi1[1][0] > t.phi2[0][0]);

  Mechanism m = spa_bidder1(inst);
  suite.add("canonical/spa-bic", bic_violations(inst, m).passed);
  CertificateReport witness = witness_report(inst, m, fl);
  bool disjoint = !intersects(in);
  suite.add("canonical/witness-iff-disjoint", witness.passed == disjoint,
            witness.passed ? "witness passed on intersecting input"
                           : "witness failed on disjoint input");

  if (!disjoint) {
    std::set<std::pair<int, int>> expected;  // both coordinates are the tied level i+1
    for (int i = 1; i <= n; ++i)
      if (in.x[i - 1] == 1 && in.y[i - 1] == 1) expected.insert({i + 1, i + 1});
    std::set<std::pair<int, int>> seen;
    bool clean = true;
    std::string w;
    for (const Check* c : witness.failures()) {
      if (c->condition != "argmax-allocation" || c->where.size() != 5 || c->where[0] != 1 ||
          c->where[2] != 2 || c->where[4] != 1 || c->where[1] != c->where[3]) {
        clean = false;
        w = c->condition + " at " + c->location;
        break;
      }
      seen.insert({static_cast<int>(c->where[1]), static_cast<int>(c->where[3])});
    }
    suite.add("canonical/witness-failure-locations", clean && seen == expected,
              clean ? "failure set does not match tied levels" : w);
  }
  return suite;
}

Suite check_modified(const DisjInput& in) {
  Suite suite;
  const int n = in.n();
  Instance inst = build_instance(in, nullptr);
  ModifiedFlowResult mod = modified_flow(inst);
  bool disjoint = !intersects(in);

  suite.add("modified/flow-valid", is_flow(inst, mod.flow).passed);
  suite.add("modified/boost-zero-iff-disjoint", (mod.eps == 0) == disjoint,
            "eps=" + render_rational(mod.eps));
  if (disjoint) return suite;

  suite.add("modified/tight-level-present",
            mod.k_star && *mod.k_star >= 2 && *mod.k_star <= n + 1,
            mod.k_star ? "k*=" + std::to_string(*mod.k_star) : "absent");
  if (!mod.k_star) return suite;
  const int k_star = *mod.k_star;

  PhiTables t = phi_tables(inst, mod.flow);
  order_bullets(suite, "modified", inst, t);

  {
    bool ok = true;
    std::string w;
    for (int k = 2; k <= n + 2; ++k)
      for (int j = 1; j <= 2; ++j)
        if (!(t.phi1[j - 1][k - 1] >= t.phi2[0][k - 1])) {
          ok = false;
          w = "k=" + std::to_string(k) + " j=" + std::to_string(j);
        }
    suite.add("modified/day2-dominance", ok, w);
  }
  suite.add("modified/tight-level-equality", t.phi1[1][k_star - 1] == t.phi2[0][k_star - 1]);
  suite.add("modified/bottom-level-order",
            t.phi1[1][0] > t.phi2[0][0] && t.phi2[0][0] > t.phi1[0][0]);

  Mechanism m = spa_careful(inst, k_star);
  suite.add("modified/careful-bic", bic_violations(inst, m).passed);
  suite.add("modified/careful-witness", witness_report(inst, m, mod.flow).passed);

  InterimForm F = interim_form(inst, m);
  {
    bool tail_ok = true, below_ok = true;
    std::string w_tail, w_below;
    for (int k = 1; k <= inst.bidder(1).n; ++k) {
      Rational u2 = utility(inst, F, 1, {k, 2}, {k, 2});
      Rational u1 = utility(inst, F, 1, {k, 1}, {k, 1});
      if (k > k_star && u2 != u1) {
        tail_ok = false;
        w_tail = "k=" + std::to_string(k);
      }
      // both truthful utilities telescope from the null type, so level 1 is
      // an exact tie; the day-2 advantage is strict from level 2 up to the
      // tight level
      if (k == 1 && u2 != u1) {
        below_ok = false;
        w_below = "k=1";
      }
      if (k > 1 && k <= k_star && !(u2 > u1)) {
        below_ok = false;
        w_below = "k=" + std::to_string(k);
      }
    }
    suite.add("modified/tail-indifference", tail_ok, w_tail);
    suite.add("modified/strict-below-tight-level", below_ok, w_below);
  }
  {
    const auto& pi = F.pi[0];
    bool eq_ok = true;
    std::string w;
    for (int k = 2; k <= inst.bidder(1).n; ++k) {
      if (k == k_star) continue;
      if (pi[flat_index({k, 2})] != pi[flat_index({k, 1})]) {
        eq_ok = false;
        w = "k=" + std::to_string(k);
      }
    }
    suite.add("modified/interim-equal-off-tight", eq_ok, w);
    suite.add("modified/interim-bottom-strict",
              pi[flat_index({1, 2})] > pi[flat_index({1, 1})]);
    suite.add("modified/interim-tight-sum",
              pi[flat_index({1, 2})] + pi[flat_index({k_star, 2})] ==
                  pi[flat_index({1, 1})] + pi[flat_index({k_star, 1})]);
  }
  suite.add("modified/outcome-bottom-profile",
            outcome_at(m, flat_index({1, 1}), flat_index({1, 1})) ==
                OutcomeSupport{false, true, false});
  return suite;
}

Suite check_all(const DisjInput& in) {
  Suite suite = check_reduction(in);
  Suite c = check_canonical(in);
  Suite m = check_modified(in);
  suite.lines.insert(suite.lines.end(), c.lines.begin(), c.lines.end());
  suite.lines.insert(suite.lines.end(), m.lines.begin(), m.lines.end());
  return suite;
}

std::vector<DisjInput> structured_inputs(int n) {
  std::vector<DisjInput> out;
  std::vector<int> zeros(n, 0), ones(n, 1);
  auto single = [&](int pos) {
    std::vector<int> v(n, 0);
    v[pos] = 1;
    return v;
  };
  out.push_back(make_disj_input(zeros, zeros));
  out.push_back(make_disj_input(ones, ones));
  out.push_back(make_disj_input(ones, zeros));
  out.push_back(make_disj_input(zeros, ones));
  out.push_back(make_disj_input(single(0), single(0)));
  out.push_back(make_disj_input(single(n - 1), single(n - 1)));
  out.push_back(make_disj_input(single(n / 2), single(n / 2)));
  {
    std::vector<int> odd(n, 0), even(n, 0);
    for (int i = 0; i < n; ++i) (i % 2 == 0 ? even : odd)[i] = 1;
    out.push_back(make_disj_input(even, odd));
  }
  out.push_back(make_disj_input(ones, single(n / 2)));
  {
    std::vector<int> lo(n, 0), hi(n, 0);
    for (int i = 0; i < n; ++i) (i < n / 2 ? lo : hi)[i] = 1;
    out.push_back(make_disj_input(lo, hi));
  }
  return out;
}

std::vector<DisjInput> random_inputs(int n, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<DisjInput> out;
  for (int c = 0; c < count; ++c) {
    std::vector<int> x(n), y(n);
    for (int i = 0; i < n; ++i) x[i] = static_cast<int>(rng() & 1);
    for (int i = 0; i < n; ++i) y[i] = static_cast<int>(rng() & 1);
    out.push_back(make_disj_input(std::move(x), std::move(y)));
  }
  return out;
}

int find_n_min(int lo, int hi, int random_per_n, std::uint64_t seed) {
  for (int n = lo; n <= hi; ++n) {
    bool all = true;
    std::vector<DisjInput> inputs = structured_inputs(n);
    std::vector<DisjInput> extra = random_inputs(n, random_per_n, seed + n);
    inputs.insert(inputs.end(), extra.begin(), extra.end());
    for (const DisjInput& in : inputs) {
      if (!check_canonical(in).pass() || !check_modified(in).pass()) {
        all = false;
        break;
      }
    }
    if (all) return n;
  }
  return -1;
}

}  // namespace auctionlab
