#include "auctionlab/flow.hpp"

#include <string>

#include "auctionlab/errors.hpp"

namespace auctionlab {

namespace {

std::string loc(int i, int k) { return "bidder " + std::to_string(i) + " level " + std::to_string(k); }

std::string loc(int i, int k, int j) {
  return loc(i, k) + " day " + std::to_string(j);
}

}  // namespace

Rational Flow::alpha(int i, int k) const {
  const auto& v = per[i - 1].alpha;
  if (k < 1 || k > static_cast<int>(v.size())) throw IndexError("alpha: level out of range");
  return v[k - 1];
}

Rational Flow::lambda(int i, int j, int k) const {
  if (j != 1 && j != 2) throw IndexError("lambda: interest out of range");
  const auto& v = per[i - 1].lambda[j - 1];
  if (k == static_cast<int>(v.size()) + 1) return Rational(0);
  if (k < 1 || k > static_cast<int>(v.size())) throw IndexError("lambda: level out of range");
  return v[k - 1];
}

Flow zero_flow(const Instance& inst) {
  Flow fl;
  for (int i = 1; i <= 2; ++i) {
    int n = inst.bidder(i).n;
    fl.per[i - 1].alpha.assign(n, Rational(0));
    fl.per[i - 1].lambda[0].assign(n, Rational(0));
    fl.per[i - 1].lambda[1].assign(n, Rational(0));
  }
  return fl;
}

CertificateReport is_flow(const Instance& inst, const Flow& fl) {
  CertificateReport report;
  for (int i = 1; i <= 2; ++i) {
    const BidderSpec& spec = inst.bidder(i);
    if (static_cast<int>(fl.per[i - 1].alpha.size()) != spec.n ||
        static_cast<int>(fl.per[i - 1].lambda[0].size()) != spec.n ||
        static_cast<int>(fl.per[i - 1].lambda[1].size()) != spec.n)
      throw ShapeError("flow shape does not match instance");
    for (int k = 1; k <= spec.n; ++k) {
      Rational lhs1 = spec.f(k, 1) + fl.lambda(i, 1, k + 1) + fl.alpha(i, k);
      Rational rhs1 = fl.lambda(i, 1, k);
      report.add("flow-day1-conservation", loc(i, k), lhs1, rhs1, lhs1 == rhs1, {i, k, 1});
      Rational lhs2 = spec.f(k, 2) + fl.lambda(i, 2, k + 1);
      Rational rhs2 = fl.alpha(i, k) + fl.lambda(i, 2, k);
      report.add("flow-day2-conservation", loc(i, k), lhs2, rhs2, lhs2 == rhs2, {i, k, 2});
      report.add("flow-nonnegative-alpha", loc(i, k), fl.alpha(i, k), Rational(0),
                 fl.alpha(i, k) >= 0, {i, k, 0});
      for (int j = 1; j <= 2; ++j)
        report.add("flow-nonnegative-lambda", loc(i, k, j), fl.lambda(i, j, k), Rational(0),
                   fl.lambda(i, j, k) >= 0, {i, k, j});
    }
  }
  return report;
}

Flow canonical_flow(const Instance& inst) {
  Flow fl = zero_flow(inst);
  for (int i = 1; i <= 2; ++i) {
    const BidderSpec& spec = inst.bidder(i);
    for (int j = 1; j <= 2; ++j) {
      Rational tail(0);
      for (int k = spec.n; k >= 1; --k) {
        tail += spec.f(k, j);
        fl.per[i - 1].lambda[j - 1][k - 1] = tail;
      }
    }
  }
  return fl;
}

Flow boost(const Instance& inst, const Flow& fl, int bidder, int k, const Rational& eps) {
  const BidderSpec& spec = inst.bidder(bidder);
  if (k < 1 || k > spec.n) throw IndexError("boost: level out of range");
  if (eps < 0) throw FlowInvalidError("boost: eps must be nonnegative");
  for (int kk = 1; kk <= k; ++kk)
    if (fl.lambda(bidder, 2, kk) < eps)
      throw BoostTooLargeError("boost: eps exceeds lambda^2 at level " + std::to_string(kk));
  Flow out = fl;
  out.per[bidder - 1].alpha[k - 1] += eps;
  for (int kk = 1; kk <= k; ++kk) {
    out.per[bidder - 1].lambda[1][kk - 1] -= eps;
    out.per[bidder - 1].lambda[0][kk - 1] += eps;
  }
  return out;
}

std::optional<Rational> virtual_value(const Instance& inst, const Flow& fl, int bidder, int k,
                                      int j) {
  const BidderSpec& spec = inst.bidder(bidder);
  if (k < 1 || k > spec.n) throw IndexError("virtual_value: level out of range");
  Rational f = spec.f(k, j);
  if (f == 0) return std::nullopt;
  Rational dv = spec.value(k + 1) - spec.value(k);
  return spec.value(k) - dv * fl.lambda(bidder, j, k + 1) / f;
}

ModifiedFlowResult modified_flow(const Instance& inst) {
  Flow canonical = canonical_flow(inst);
  const BidderSpec& one = inst.bidder(1);
  Rational eps(0);
  for (int k = 1; k < one.n; ++k) {
    auto phi2 = virtual_value(inst, canonical, 2, k, 1);
    auto phi1 = virtual_value(inst, canonical, 1, k, 2);
    if (!phi1 || !phi2) continue;
    Rational dv = one.value(k + 1) - one.value(k);
    Rational need = (*phi2 - *phi1) * one.f(k, 2) / dv;
    if (need > eps) eps = need;
  }
  ModifiedFlowResult out{boost(inst, canonical, 1, one.n, eps), eps, std::nullopt};
  if (eps > 0) {
    for (int k = 1; k < one.n; ++k) {
      auto phi1 = virtual_value(inst, out.flow, 1, k, 2);
      auto phi2 = virtual_value(inst, out.flow, 2, k, 1);
      if (phi1 && phi2 && *phi1 == *phi2) {
        out.k_star = k;
        break;
      }
    }
  }
  return out;
}

namespace {

void check_interim_shape(const Instance& inst, const InterimForm& F) {
  for (int i = 1; i <= 2; ++i) {
    int types = inst.bidder(i).num_types();
    if (static_cast<int>(F.pi[i - 1].size()) != types ||
        static_cast<int>(F.p[i - 1].size()) != types)
      throw ShapeError("interim form does not match instance");
  }
}

}  // namespace

Rational lagrangian_value(const Instance& inst, const Flow& fl, const InterimForm& F) {
  check_interim_shape(inst, F);
  if (!is_flow(inst, fl).passed)
    throw FlowInvalidError("lagrangian_value: multipliers do not satisfy flow conservation");
  Rational total(0);
  for (int i = 1; i <= 2; ++i) {
    const BidderSpec& spec = inst.bidder(i);
    for (int k = 1; k <= spec.n; ++k) {
      Rational dv = spec.value(k + 1) - spec.value(k);
      for (int j = 1; j <= 2; ++j) {
        Rational coef = spec.f(k, j) * spec.value(k) - fl.lambda(i, j, k + 1) * dv;
        total += F.pi[i - 1][flat_index({k, j})] * coef;
      }
    }
  }
  return total;
}

Rational lagrangian_value_long(const Instance& inst, const Flow& fl, const InterimForm& F) {
  check_interim_shape(inst, F);
  Rational total(0);
  for (int i = 1; i <= 2; ++i) {
    const BidderSpec& spec = inst.bidder(i);
    const auto& pi = F.pi[i - 1];
    const auto& p = F.p[i - 1];
    auto U = [&](int truek, int repk, int repj) {
      // utility of level truek when taking level repk's day-repj menu entry;
      // repk = 0 is the null report, worth exactly 0
      if (repk == 0) return Rational(0);
      int t = flat_index({repk, repj});
      return Rational(spec.value(truek) * pi[t] - p[t]);
    };
    for (int k = 1; k <= spec.n; ++k) {
      for (int j = 1; j <= 2; ++j) total += spec.f(k, j) * p[flat_index({k, j})];
      total += fl.alpha(i, k) * (U(k, k, 2) - U(k, k, 1));
      for (int j = 1; j <= 2; ++j)
        total += fl.lambda(i, j, k) * (U(k, k, j) - U(k, k - 1, j));
    }
  }
  return total;
}

}  // namespace auctionlab
