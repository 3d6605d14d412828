#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "auctionlab/rational.hpp"

namespace auctionlab {

// Single-interest (one-dimensional) discrete value distribution.
struct SingleDimDistribution {
  std::vector<Rational> values;  // strictly increasing, positive
  std::vector<Rational> probs;   // same length, sum 1
  int n() const { return static_cast<int>(values.size()); }
};

SingleDimDistribution make_single_dim(std::vector<Rational> values, std::vector<Rational> probs);

// R(v^k) = sum_{k' >= k} f(v^k'), defined for k in [1, n+1].
Rational tail_mass(const SingleDimDistribution& d, int k);

// phi(v^k) = v^k - (v^{k+1} - v^k) R(v^{k+1}) / f(v^k), with v^{n+1} = v^n.
// Throws ZeroMassError if any point has zero probability.
std::vector<Rational> single_dim_virtuals(const SingleDimDistribution& d);

// Ironed virtual values: slopes of the upper concave envelope of the points
// (R(v^k), v^k R(v^k)) for k in [1, n+1] in tail-mass coordinates. Blocks are
// maximal runs of levels sharing an envelope segment; phi_bar is constant on
// each block, nondecreasing in k, and block-averages phi exactly.
struct IronedTable {
  std::vector<Rational> phi;
  std::vector<Rational> phi_bar;
  std::vector<int> block_id;                  // 0-based, per level
  std::vector<std::pair<int, int>> blocks;    // 1-based inclusive level ranges
};

IronedTable iron(const SingleDimDistribution& d);

// The three numbers that determine phi_bar(v^k): the envelope segment's
// endpoint products v R(v) and the probability mass it spans. For integer
// values and probabilities with a common poly-sized denominator these have
// O(log) bit length, independent of where k sits in the support.
struct IronedCode {
  Rational head;  // v^{lo} R(v^{lo}) at the block's low end
  Rational tail;  // v^{hi+1} R(v^{hi+1}) past the block's high end
  Rational mass;  // R(v^{lo}) - R(v^{hi+1})
};

IronedCode encode_ironed(const SingleDimDistribution& d, int k);
Rational decode_ironed(const IronedCode& code);

struct WinnerResult {
  std::optional<int> winner;     // 1-based bidder index; empty means no sale
  std::optional<Rational> price;
};

// Awards to the lowest-index maximizer of nonnegative phi_bar; no sale if all
// are negative. Price is the smallest support value at which the winner still
// wins under the same tie-breaking (strictly beating lower-index bidders).
// Throws ValueNotInSupportError if a report is not in its support.
WinnerResult myerson_winner(const std::vector<SingleDimDistribution>& dists,
                            const std::vector<Rational>& reports);

// Expected payment of the above auction under independent draws.
Rational myerson_expected_revenue(const std::vector<SingleDimDistribution>& dists);

}  // namespace auctionlab
