#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "auctionlab/reduction.hpp"

namespace auctionlab {

struct CheckLine {
  std::string name;
  bool pass = false;
  std::string detail;  // counterexample coordinates on failure
};

struct Suite {
  std::vector<CheckLine> lines;
  bool pass() const;
  void add(const std::string& name, bool ok, const std::string& detail = "");
};

// Exact distribution-level facts: family masses (1/2, 1/2, 1), scaled
// probabilities inside their stated ranges, the z recurrences' closed forms
// at level 2, helper gap/monotonicity/range bounds for all three families,
// and Bidder Two's lowest-level mass minimality. Hold for every n >= 2.
Suite check_reduction(const DisjInput& in);

// Canonical-flow facts: flow validity, the virtual-value ordering bullets,
// positivity, and the tie-to-One witness passing iff the input is disjoint,
// with failures located exactly at the day-2 ties of intersecting levels.
// Hold only from the verified minimum size upward.
Suite check_canonical(const DisjInput& in);

// Boosted-flow facts: validity, eps = 0 iff disjoint, the ordering bullets
// with day-2 dominance and a tight level, the careful tie auction's
// incentive and witness certificates, tail indifference, interim identities,
// and the lowest-profile outcome.
Suite check_modified(const DisjInput& in);

Suite check_all(const DisjInput& in);

// Fixed corpus: disjoint and intersecting patterns with extremes at the
// first, middle, and last positions.
std::vector<DisjInput> structured_inputs(int n);
std::vector<DisjInput> random_inputs(int n, int count, std::uint64_t seed);

// Smallest n in [lo, hi] whose canonical and modified suites pass on the
// structured corpus plus `random_per_n` seeded random inputs; -1 if none.
int find_n_min(int lo, int hi, int random_per_n, std::uint64_t seed);

}  // namespace auctionlab
