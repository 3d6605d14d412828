#include "auctionlab/instance.hpp"

#include <string>

#include "auctionlab/errors.hpp"

namespace auctionlab {

int flat_index(const BidderTypeLabel& t) {
  if (t.k == 0) return 0;
  return 2 * t.k - 2 + t.j;
}

BidderTypeLabel label_of(int flat) {
  if (flat < 0) throw IndexError("label_of: negative flat index");
  if (flat == 0) return {0, 1};
  return {(flat + 1) / 2, flat % 2 == 1 ? 1 : 2};
}

Rational BidderSpec::value(int k) const {
  if (k == 0) return Rational(0);
  if (k == n + 1) return values[n - 1];
  if (k < 0 || k > n + 1) throw IndexError("value: level " + std::to_string(k) + " out of range");
  return values[k - 1];
}

Rational BidderSpec::f(int k, int j) const {
  if (k == 0) return Rational(0);
  if (k < 0 || k > n) throw IndexError("f: level " + std::to_string(k) + " out of range");
  if (j != 1 && j != 2) throw IndexError("f: interest " + std::to_string(j) + " out of range");
  return probs[j - 1][k - 1];
}

const BidderSpec& Instance::bidder(int i) const {
  if (i != 1 && i != 2) throw IndexError("bidder index must be 1 or 2");
  return specs[i - 1];
}

namespace {

void validate(const BidderSpec& spec, int which) {
  const std::string who = "bidder " + std::to_string(which);
  if (spec.n <= 0) throw ShapeError(who + ": n must be positive");
  if (static_cast<int>(spec.values.size()) != spec.n)
    throw LengthMismatchError(who + ": values length != n");
  for (int j = 0; j < 2; ++j)
    if (static_cast<int>(spec.probs[j].size()) != spec.n)
      throw LengthMismatchError(who + ": probs length != n");
  if (spec.values[0] <= 0) throw ValueOrderError(who + ": values must exceed the null value 0");
  for (int k = 1; k < spec.n; ++k)
    if (spec.values[k] <= spec.values[k - 1])
      throw ValueOrderError(who + ": values must be strictly increasing");
  Rational total(0);
  for (int j = 0; j < 2; ++j)
    for (const Rational& p : spec.probs[j]) {
      if (p < 0) throw NegativeProbabilityError(who + ": negative probability");
      total += p;
    }
  if (total != 1) throw ProbabilitySumError(who + ": probabilities must sum to 1 exactly");
}

}  // namespace

Instance make_instance(BidderSpec b1, BidderSpec b2) {
  validate(b1, 1);
  validate(b2, 2);
  return Instance{{std::move(b1), std::move(b2)}};
}

Rational reverse_mass(const Instance& inst, int bidder, int k, int j) {
  const BidderSpec& spec = inst.bidder(bidder);
  if (k < 1 || k > spec.n + 1) throw IndexError("reverse_mass: level out of range");
  Rational sum(0);
  for (int kk = k; kk <= spec.n; ++kk) sum += spec.f(kk, j);
  return sum;
}

}  // namespace auctionlab
