#pragma once

#include <array>
#include <optional>

#include "auctionlab/certificate.hpp"
#include "auctionlab/flow.hpp"
#include "auctionlab/instance.hpp"
#include "auctionlab/linalg.hpp"

namespace auctionlab {

// Ex-post description over flat type indices: X[i-1](r, c) and P[i-1](r, c)
// are bidder i's allocation probability and payment when Bidder One reports
// flat index r and Bidder Two reports flat index c. Row/column 0 is the null
// report.
struct Mechanism {
  std::array<RatMatrix, 2> X;
  std::array<RatMatrix, 2> P;
};

// Who gets the item at a profile of flat reports; `none` marks leftover
// probability.
struct OutcomeSupport {
  bool bidder1 = false;
  bool bidder2 = false;
  bool none = false;
  friend bool operator==(const OutcomeSupport&, const OutcomeSupport&) = default;
};

OutcomeSupport outcome_at(const Mechanism& m, int flat1, int flat2);

InterimForm interim_form(const Instance& inst, const Mechanism& m);

// p((v^k,j)) = sum_{l<=k} v^l (pi((v^l,j)) - pi((v^{l-1},j))), pi at null = 0.
// Throws NotMonotoneError if pi is not nondecreasing along an interest chain.
std::vector<Rational> payments_from_identity(const Instance& inst, int bidder,
                                             const std::vector<Rational>& pi);

// Expected payment collected from both bidders under the joint type
// distribution.
Rational revenue(const Instance& inst, const Mechanism& m);

// Interim utility of true_type when reporting `reported`. A report with a
// later interest than the true one yields no value; the null report yields 0.
Rational utility(const Instance& inst, const InterimForm& F, int bidder, BidderTypeLabel true_type,
                 BidderTypeLabel reported);

// Feasibility (X in [0,1], X1 + X2 <= 1 per profile), null-report zeroing,
// payment nonnegativity, and every incentive constraint (reports may move to
// any level at an interest no later than the true one, including null).
CertificateReport bic_violations(const Instance& inst, const Mechanism& m);

// Second-price-by-value auction, ties to Bidder One, identity payments.
Mechanism spa_bidder1(const Instance& inst);

// Second-price variant whose tie rule depends on Bidder One's interest:
// day-1 ties go to Bidder One except at the lowest level (Bidder Two);
// day-2 ties go to Bidder One except at level k_star, where Bidder Two wins
// with probability f_2((v^1,1)) / f_2((v^{k_star},1)). Identity payments.
// Throws InfeasibleTieSplitError if that ratio exceeds 1.
Mechanism spa_careful(const Instance& inst, int k_star);

// Optimality witness for (m, fl): fl is a flow, m pays by the payment
// identity, every boosted level is utility-tight across interests, and on
// every positive-probability profile allocation goes only to maximizers of
// nonnegative virtual value, with full allocation whenever one is positive.
CertificateReport witness_report(const Instance& inst, const Mechanism& m, const Flow& fl);

// canonical flow + tie-to-One auction; if that witness fails, the boosted
// flow + careful tie auction at its tight level.
struct CertifiedAuction {
  Mechanism m;
  Flow flow;
  Rational eps;
  std::optional<int> k_star;
  bool used_modified = false;
  CertificateReport bic;
  CertificateReport witness;
  bool certified = false;
};

CertifiedAuction certify_auction(const Instance& inst);

}  // namespace auctionlab
