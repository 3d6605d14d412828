#pragma once

#include <array>
#include <optional>
#include <vector>

#include "auctionlab/certificate.hpp"
#include "auctionlab/instance.hpp"

namespace auctionlab {

// Lagrangian multipliers on the incentive constraints, one set per bidder.
// alpha(k) sits on "(v^k,2) truthful vs reporting (v^k,1)"; lambda^j(k) sits
// on "(v^k,j) truthful vs reporting (v^{k-1},j)" (k = 1 targets the null
// type, i.e. individual rationality). lambda(n_i + 1) reads as 0.
struct Flow {
  struct PerBidder {
    std::vector<Rational> alpha;                  // alpha[k-1], k in [1, n]
    std::array<std::vector<Rational>, 2> lambda;  // lambda[j-1][k-1]
    friend bool operator==(const PerBidder&, const PerBidder&) = default;
  };
  std::array<PerBidder, 2> per;

  Rational alpha(int i, int k) const;
  Rational lambda(int i, int j, int k) const;  // k in [1, n_i + 1]
  friend bool operator==(const Flow&, const Flow&) = default;
};

Flow zero_flow(const Instance& inst);

// Conservation at every non-null node plus nonnegativity:
//   f_i(k,1) + lambda^1(k+1) + alpha(k) = lambda^1(k)
//   f_i(k,2) + lambda^2(k+1)           = alpha(k) + lambda^2(k)
CertificateReport is_flow(const Instance& inst, const Flow& fl);

// alpha = 0, lambda^j(k) = R_i((v^k, j)).
Flow canonical_flow(const Instance& inst);

// Adds eps to alpha_i(k), moving eps of day-2 flow onto the day-1 ladder for
// every level at or below k. Throws BoostTooLargeError if eps exceeds some
// lambda^2(k') with k' <= k, FlowInvalidError if eps < 0.
Flow boost(const Instance& inst, const Flow& fl, int bidder, int k, const Rational& eps);

// Phi((v^k,j)) = v^k - (v^{k+1} - v^k) * lambda^j(k+1) / f((v^k,j));
// undefined (nullopt) where the type has zero mass.
std::optional<Rational> virtual_value(const Instance& inst, const Flow& fl, int bidder, int k,
                                      int j);

struct ModifiedFlowResult {
  Flow flow;
  Rational eps;
  std::optional<int> k_star;  // smallest level where the post-boost day-2/day-1
                              // comparison is exactly tight; absent when eps = 0
};

// Boosts Bidder One's canonical flow at its top level by the minimum eps
// making Phi_1((v^k,2)) >= Phi_2((v^k,1)) wherever both sides are defined.
ModifiedFlowResult modified_flow(const Instance& inst);

// Interim view of a mechanism: allocation probability and expected payment
// per flat type index (index 0 is the null type and is identically zero for
// any valid mechanism).
struct InterimForm {
  std::array<std::vector<Rational>, 2> pi;
  std::array<std::vector<Rational>, 2> p;
};

// Value of the Lagrangian at an interim form, written as
//   sum_i sum_{k,j} pi_i(k,j) * (f_i(k,j) v^k - lambda_i^j(k+1) (v^{k+1}-v^k)).
// Requires fl to satisfy is_flow (throws FlowInvalidError otherwise); under
// the conservation identities this equals lagrangian_value_long exactly.
Rational lagrangian_value(const Instance& inst, const Flow& fl, const InterimForm& F);

// The definition read off the constraint set: revenue plus multiplier-weighted
// incentive slacks. Defined for arbitrary multipliers.
Rational lagrangian_value_long(const Instance& inst, const Flow& fl, const InterimForm& F);

}  // namespace auctionlab
