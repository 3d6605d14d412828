#pragma once

#include <array>
#include <vector>

#include "auctionlab/rational.hpp"

namespace auctionlab {

// Interests are ordered: a Day2 buyer may consume a Day1 allocation, never the
// reverse. Stored as 1 and 2 so arithmetic comparisons read naturally.
enum class Interest : int { Day1 = 1, Day2 = 2 };

// k = 0 is the null type (value 0, probability 0); j is ignored there.
// Otherwise k in [1, n], j in {1, 2}.
struct BidderTypeLabel {
  int k = 0;
  int j = 1;
  bool is_null() const { return k == 0; }
  friend bool operator==(const BidderTypeLabel&, const BidderTypeLabel&) = default;
};

// Flat order: null, (v^1,1), (v^1,2), (v^2,1), (v^2,2), ...
int flat_index(const BidderTypeLabel& t);
BidderTypeLabel label_of(int flat);

struct BidderSpec {
  int n = 0;
  std::vector<Rational> values;                 // values[k-1] = v^k, strictly increasing, > 0
  std::array<std::vector<Rational>, 2> probs;   // probs[j-1][k-1] = f((v^k, j))

  int num_types() const { return 2 * n + 1; }
  // v^0 = 0 and v^{n+1} = v^n by convention.
  Rational value(int k) const;
  Rational f(int k, int j) const;  // f(0, j) = 0
  Rational f(const BidderTypeLabel& t) const { return f(t.k, t.j); }
};

struct Instance {
  std::array<BidderSpec, 2> specs;
  const BidderSpec& bidder(int i) const;  // i in {1, 2}
};

// Validates shape (lengths match n), value order (strictly increasing, first
// value positive), nonnegativity, and total mass exactly 1 per bidder.
Instance make_instance(BidderSpec b1, BidderSpec b2);

// R_i((v^k, j)) = sum_{k' >= k} f_i((v^{k'}, j)); defined for k in [1, n+1]
// with R_i((v^{n+1}, j)) = 0.
Rational reverse_mass(const Instance& inst, int bidder, int k, int j);

}  // namespace auctionlab
