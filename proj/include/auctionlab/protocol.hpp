#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "auctionlab/mechanism.hpp"
#include "auctionlab/myerson.hpp"
#include "auctionlab/reduction.hpp"

namespace auctionlab {

struct Message {
  int sender = 0;  // 1 = Alice, 2 = Bob
  std::vector<std::uint8_t> bytes;
};

struct Transcript {
  std::vector<Message> messages;
  long long bits_from(int sender) const;
  long long total_bits() const;
};

bool disj_oracle(const DisjInput& in);  // true iff x and y share no index

// Two-party winner determination for single-interest bidders. Alice holds
// (d1, report1), Bob holds (d2, report2).
struct SingleDimRun {
  WinnerResult result;
  Transcript transcript;
};

// Alice sends only the envelope-segment triple for her report; Bob decides
// the winner, pricing himself locally or asking Alice one clamped threshold
// query. Total communication is logarithmic for poly-bounded distributions.
SingleDimRun run_singledim_protocol(const SingleDimDistribution& d1, const Rational& report1,
                                    const SingleDimDistribution& d2, const Rational& report2);

// Baseline: Alice ships her whole distribution and report; Bob computes the
// outcome and replies.
SingleDimRun run_singledim_full(const SingleDimDistribution& d1, const Rational& report1,
                                const SingleDimDistribution& d2, const Rational& report2);

// Full-transfer protocol for the two-interest instances: Alice (holding x)
// ships Bidder One's probability tables, Bob (holding y) certifies a
// revenue-optimal auction and reports its outcome at the lowest-value
// profile.
struct AuctionRun {
  OutcomeSupport outcome;  // at ((v^1,1), (v^1,1))
  bool certified = false;
  Transcript transcript;
};

AuctionRun run_auction_protocol(const DisjInput& in);

// Reads set intersection off the certified auction: on disjoint inputs the
// lowest-value tie goes to Bidder One, on intersecting ones to Bidder Two.
// Throws Error if certification fails (inputs below the verified size range).
bool disj_via_auction(const DisjInput& in);

}  // namespace auctionlab
