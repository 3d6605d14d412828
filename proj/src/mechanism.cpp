#include "auctionlab/mechanism.hpp"

#include <string>

#include "auctionlab/errors.hpp"

namespace auctionlab {

namespace {

std::string type_str(const BidderTypeLabel& t) {
  if (t.is_null()) return "null";
  return "(" + std::to_string(t.k) + "," + std::to_string(t.j) + ")";
}

std::string profile_str(const BidderTypeLabel& t1, const BidderTypeLabel& t2) {
  return type_str(t1) + "x" + type_str(t2);
}

void check_shape(const Instance& inst, const Mechanism& m) {
  int r = inst.bidder(1).num_types();
  int c = inst.bidder(2).num_types();
  for (int i = 0; i < 2; ++i)
    if (m.X[i].rows() != r || m.X[i].cols() != c || m.P[i].rows() != r || m.P[i].cols() != c)
      throw ShapeError("mechanism tables do not match instance");
}

}  // namespace

OutcomeSupport outcome_at(const Mechanism& m, int flat1, int flat2) {
  Rational x1 = m.X[0](flat1, flat2);
  Rational x2 = m.X[1](flat1, flat2);
  return OutcomeSupport{x1 > 0, x2 > 0, x1 + x2 < 1};
}

InterimForm interim_form(const Instance& inst, const Mechanism& m) {
  check_shape(inst, m);
  InterimForm F;
  for (int i = 1; i <= 2; ++i) {
    const BidderSpec& own = inst.bidder(i);
    const BidderSpec& opp = inst.bidder(3 - i);
    F.pi[i - 1].assign(own.num_types(), Rational(0));
    F.p[i - 1].assign(own.num_types(), Rational(0));
    for (int t = 0; t < own.num_types(); ++t) {
      Rational pi(0), p(0);
      for (int s = 1; s < opp.num_types(); ++s) {
        Rational w = opp.f(label_of(s));
        if (w == 0) continue;
        if (i == 1) {
          pi += w * m.X[0](t, s);
          p += w * m.P[0](t, s);
        } else {
          pi += w * m.X[1](s, t);
          p += w * m.P[1](s, t);
        }
      }
      F.pi[i - 1][t] = pi;
      F.p[i - 1][t] = p;
    }
  }
  return F;
}

std::vector<Rational> payments_from_identity(const Instance& inst, int bidder,
                                             const std::vector<Rational>& pi) {
  const BidderSpec& spec = inst.bidder(bidder);
  if (static_cast<int>(pi.size()) != spec.num_types())
    throw ShapeError("interim allocation length does not match instance");
  std::vector<Rational> p(spec.num_types(), Rational(0));
  for (int j = 1; j <= 2; ++j) {
    Rational prev(0), pay(0);
    for (int k = 1; k <= spec.n; ++k) {
      Rational cur = pi[flat_index({k, j})];
      if (cur < prev)
        throw NotMonotoneError("interim allocation decreases at level " + std::to_string(k) +
                               " day " + std::to_string(j));
      pay += spec.value(k) * (cur - prev);
      p[flat_index({k, j})] = pay;
      prev = cur;
    }
  }
  return p;
}

Rational revenue(const Instance& inst, const Mechanism& m) {
  check_shape(inst, m);
  Rational total(0);
  const BidderSpec& one = inst.bidder(1);
  const BidderSpec& two = inst.bidder(2);
  for (int t1 = 1; t1 < one.num_types(); ++t1) {
    Rational f1 = one.f(label_of(t1));
    if (f1 == 0) continue;
    for (int t2 = 1; t2 < two.num_types(); ++t2) {
      Rational f2 = two.f(label_of(t2));
      if (f2 == 0) continue;
      total += f1 * f2 * (m.P[0](t1, t2) + m.P[1](t1, t2));
    }
  }
  return total;
}

Rational utility(const Instance& inst, const InterimForm& F, int bidder, BidderTypeLabel true_type,
                 BidderTypeLabel reported) {
  const BidderSpec& spec = inst.bidder(bidder);
  if (true_type.k < 0 || true_type.k > spec.n || reported.k < 0 || reported.k > spec.n)
    throw IndexError("utility: level out of range");
  if (reported.is_null()) return Rational(0);
  int t = flat_index(reported);
  // value accrues only if the consumed interest is no later than the true one
  Rational v = (!true_type.is_null() && reported.j <= true_type.j) ? spec.value(true_type.k)
                                                                   : Rational(0);
  return v * F.pi[bidder - 1][t] - F.p[bidder - 1][t];
}

CertificateReport bic_violations(const Instance& inst, const Mechanism& m) {
  check_shape(inst, m);
  CertificateReport report;
  const BidderSpec& one = inst.bidder(1);
  const BidderSpec& two = inst.bidder(2);

  for (int t1 = 0; t1 < one.num_types(); ++t1)
    for (int t2 = 0; t2 < two.num_types(); ++t2) {
      Rational x1 = m.X[0](t1, t2), x2 = m.X[1](t1, t2);
      bool box = x1 >= 0 && x1 <= 1 && x2 >= 0 && x2 <= 1;
      report.add("allocation-in-unit-box", profile_str(label_of(t1), label_of(t2)),
                 x1, x2, box, {t1, t2});
      report.add("supply", profile_str(label_of(t1), label_of(t2)), x1 + x2, Rational(1),
                 x1 + x2 <= 1, {t1, t2});
    }

  for (int t2 = 0; t2 < two.num_types(); ++t2) {
    bool z = m.X[0](0, t2) == 0 && m.P[0](0, t2) == 0;
    report.add("null-report-zeroed", profile_str({0, 1}, label_of(t2)), m.X[0](0, t2),
               m.P[0](0, t2), z, {1, t2});
  }
  for (int t1 = 0; t1 < one.num_types(); ++t1) {
    bool z = m.X[1](t1, 0) == 0 && m.P[1](t1, 0) == 0;
    report.add("null-report-zeroed", profile_str(label_of(t1), {0, 1}), m.X[1](t1, 0),
               m.P[1](t1, 0), z, {2, t1});
  }

  InterimForm F = interim_form(inst, m);
  for (int i = 1; i <= 2; ++i) {
    const BidderSpec& spec = inst.bidder(i);
    for (int t = 1; t < spec.num_types(); ++t) {
      BidderTypeLabel rep = label_of(t);
      report.add("payment-nonnegative", "bidder " + std::to_string(i) + " " + type_str(rep),
                 F.p[i - 1][t], Rational(0), F.p[i - 1][t] >= 0, {i, rep.k, rep.j});
    }
    for (int k = 1; k <= spec.n; ++k)
      for (int j = 1; j <= 2; ++j) {
        BidderTypeLabel truth{k, j};
        Rational truthful = utility(inst, F, i, truth, truth);
        report.add("individually-rational",
                   "bidder " + std::to_string(i) + " " + type_str(truth), truthful, Rational(0),
                   truthful >= 0, {i, k, j, 0, 0});
        for (int jj = 1; jj <= j; ++jj)
          for (int kk = 1; kk <= spec.n; ++kk) {
            if (kk == k && jj == j) continue;
            Rational dev = utility(inst, F, i, truth, {kk, jj});
            report.add("incentive-compatible",
                       "bidder " + std::to_string(i) + " " + type_str(truth) + "->" +
                           type_str({kk, jj}),
                       truthful, dev, truthful >= dev, {i, k, j, kk, jj});
          }
      }
  }
  return report;
}

namespace {

// Builds identity payments from the interim allocation of X and broadcasts
// them into ex-post tables.
Mechanism finish_with_identity_payments(const Instance& inst, Mechanism m) {
  InterimForm F = interim_form(inst, m);
  for (int i = 1; i <= 2; ++i) {
    std::vector<Rational> pay = payments_from_identity(inst, i, F.pi[i - 1]);
    const BidderSpec& one = inst.bidder(1);
    const BidderSpec& two = inst.bidder(2);
    for (int t1 = 0; t1 < one.num_types(); ++t1)
      for (int t2 = 0; t2 < two.num_types(); ++t2)
        m.P[i - 1](t1, t2) = i == 1 ? pay[t1] : pay[t2];
  }
  return m;
}

Mechanism blank_mechanism(const Instance& inst) {
  int r = inst.bidder(1).num_types();
  int c = inst.bidder(2).num_types();
  Mechanism m;
  for (int i = 0; i < 2; ++i) {
    m.X[i] = RatMatrix::Constant(r, c, Rational(0));
    m.P[i] = RatMatrix::Constant(r, c, Rational(0));
  }
  return m;
}

}  // namespace

Mechanism spa_bidder1(const Instance& inst) {
  Mechanism m = blank_mechanism(inst);
  const BidderSpec& one = inst.bidder(1);
  const BidderSpec& two = inst.bidder(2);
  for (int t1 = 0; t1 < one.num_types(); ++t1) {
    Rational v1 = one.value(label_of(t1).k);  // value(0) = 0, so a lone null loses
    for (int t2 = 0; t2 < two.num_types(); ++t2) {
      if (t1 == 0 && t2 == 0) continue;
      Rational v2 = two.value(label_of(t2).k);
      if (v1 >= v2 && t1 != 0)
        m.X[0](t1, t2) = 1;
      else if (t2 != 0)
        m.X[1](t1, t2) = 1;
      else
        m.X[0](t1, t2) = 1;
    }
  }
  return finish_with_identity_payments(inst, m);
}

Mechanism spa_careful(const Instance& inst, int k_star) {
  const BidderSpec& one = inst.bidder(1);
  const BidderSpec& two = inst.bidder(2);
  if (k_star < 1 || k_star > two.n) throw IndexError("spa_careful: k_star out of range");
  Rational f_low = two.f(1, 1);
  Rational f_star = two.f(k_star, 1);
  if (f_star == 0 || f_low > f_star)
    throw InfeasibleTieSplitError("tie split needs f_2((v^1,1)) <= f_2((v^k*,1)) > 0");
  Rational q = f_low / f_star;  // Bidder Two's share of the day-2 tie at k_star

  Mechanism m = blank_mechanism(inst);
  for (int t1 = 0; t1 < one.num_types(); ++t1) {
    BidderTypeLabel l1 = label_of(t1);
    Rational v1 = one.value(l1.k);  // value(0) = 0, so a lone null loses
    for (int t2 = 0; t2 < two.num_types(); ++t2) {
      if (t1 == 0 && t2 == 0) continue;
      BidderTypeLabel l2 = label_of(t2);
      Rational v2 = two.value(l2.k);
      if (t1 == 0) {
        m.X[1](t1, t2) = 1;
      } else if (t2 == 0) {
        m.X[0](t1, t2) = 1;
      } else if (v1 > v2) {
        m.X[0](t1, t2) = 1;
      } else if (v1 < v2) {
        m.X[1](t1, t2) = 1;
      } else if (l1.j == 1) {
        if (l1.k == 1)
          m.X[1](t1, t2) = 1;
        else
          m.X[0](t1, t2) = 1;
      } else if (l1.k == k_star) {
        m.X[0](t1, t2) = 1 - q;
        m.X[1](t1, t2) = q;
      } else {
        m.X[0](t1, t2) = 1;
      }
    }
  }
  return finish_with_identity_payments(inst, m);
}

CertificateReport witness_report(const Instance& inst, const Mechanism& m, const Flow& fl) {
  check_shape(inst, m);
  CertificateReport report;

  CertificateReport flow_ok = is_flow(inst, fl);
  report.add("flow-valid", "multipliers", Rational(flow_ok.passed ? 1 : 0), Rational(1),
             flow_ok.passed);
  if (!flow_ok.passed) {
    for (const Check* c : flow_ok.failures()) report.add(*c);
    return report;
  }

  InterimForm F = interim_form(inst, m);

  for (int i = 1; i <= 2; ++i) {
    const BidderSpec& spec = inst.bidder(i);
    bool monotone = true;
    for (int j = 1; j <= 2 && monotone; ++j) {
      Rational prev(0);
      for (int k = 1; k <= spec.n; ++k) {
        Rational cur = F.pi[i - 1][flat_index({k, j})];
        if (cur < prev) {
          report.add("interim-monotone", "bidder " + std::to_string(i), cur, prev, false,
                     {i, k, j});
          monotone = false;
          break;
        }
        prev = cur;
      }
    }
    if (!monotone) continue;
    std::vector<Rational> pay = payments_from_identity(inst, i, F.pi[i - 1]);
    for (int t = 1; t < spec.num_types(); ++t) {
      BidderTypeLabel l = label_of(t);
      report.add("payment-identity", "bidder " + std::to_string(i) + " " + type_str(l),
                 F.p[i - 1][t], pay[t], F.p[i - 1][t] == pay[t], {i, l.k, l.j});
    }
  }

  for (int i = 1; i <= 2; ++i) {
    const BidderSpec& spec = inst.bidder(i);
    for (int k = 1; k <= spec.n; ++k) {
      if (fl.alpha(i, k) == 0) continue;
      Rational u2 = utility(inst, F, i, {k, 2}, {k, 2});
      Rational u1 = utility(inst, F, i, {k, 1}, {k, 1});
      report.add("tight-at-boosted-level", "bidder " + std::to_string(i) + " level " +
                     std::to_string(k), u2, u1, u2 == u1, {i, k});
    }
  }

  const BidderSpec& one = inst.bidder(1);
  const BidderSpec& two = inst.bidder(2);
  for (int t1 = 1; t1 < one.num_types(); ++t1) {
    BidderTypeLabel l1 = label_of(t1);
    if (one.f(l1) == 0) continue;
    for (int t2 = 1; t2 < two.num_types(); ++t2) {
      BidderTypeLabel l2 = label_of(t2);
      if (two.f(l2) == 0) continue;
      Rational phi1 = *virtual_value(inst, fl, 1, l1.k, l1.j);
      Rational phi2 = *virtual_value(inst, fl, 2, l2.k, l2.j);
      Rational best = phi1 >= phi2 ? phi1 : phi2;
      const std::string where = profile_str(l1, l2);
      for (int i = 0; i < 2; ++i) {
        if (m.X[i](t1, t2) == 0) continue;
        Rational own = i == 0 ? phi1 : phi2;
        bool ok = own >= 0 && own == best;
        report.add("argmax-allocation", "bidder " + std::to_string(i + 1) + " at " + where, own,
                   best, ok, {i + 1, l1.k, l1.j, l2.k, l2.j});
      }
      if (best > 0) {
        Rational total = m.X[0](t1, t2) + m.X[1](t1, t2);
        report.add("allocation-saturation", where, total, Rational(1), total == 1,
                   {0, l1.k, l1.j, l2.k, l2.j});
      }
    }
  }
  return report;
}

CertifiedAuction certify_auction(const Instance& inst) {
  CertifiedAuction out;
  out.flow = canonical_flow(inst);
  out.eps = Rational(0);
  out.m = spa_bidder1(inst);
  out.bic = bic_violations(inst, out.m);
  out.witness = witness_report(inst, out.m, out.flow);
  if (out.bic.passed && out.witness.passed) {
    out.certified = true;
    return out;
  }
  ModifiedFlowResult mod = modified_flow(inst);
  if (!mod.k_star) return out;  // boost has no tight level to hand the tie rule
  out.used_modified = true;
  out.flow = mod.flow;
  out.eps = mod.eps;
  out.k_star = mod.k_star;
  out.m = spa_careful(inst, *mod.k_star);
  out.bic = bic_violations(inst, out.m);
  out.witness = witness_report(inst, out.m, out.flow);
  out.certified = out.bic.passed && out.witness.passed;
  return out;
}

}  // namespace auctionlab
