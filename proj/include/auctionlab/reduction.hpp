#pragma once

#include <string>
#include <vector>

#include "auctionlab/instance.hpp"
#include "auctionlab/rational.hpp"

namespace auctionlab {

// A two-party set-intersection input: x held by Alice, y held by Bob,
// entries in {0, 1}. "Disjoint" means no position has x_i = y_i = 1.
struct DisjInput {
  std::vector<int> x;
  std::vector<int> y;
  int n() const { return static_cast<int>(x.size()); }
};

DisjInput make_disj_input(std::vector<int> x, std::vector<int> y);
DisjInput disj_input_from_strings(const std::string& x, const std::string& y);
std::string bits_to_string(const std::vector<int>& bits);
bool intersects(const DisjInput& in);  // true iff some i has x_i = y_i = 1

// One probability family produced by the water-filling recurrence.
// scaled[k-1] is the numerator of f(v^k) over the family denominator
// (2b for Bidder One's families, b for Bidder Two's); z[k-2] = z_k for
// k in [2, n+2].
struct FamilyTrace {
  std::vector<Integer> scaled;
  std::vector<Rational> z;
};

struct ReductionTrace {
  int n = 0;
  Integer b;   // 10 n^6
  Rational a;  // (b - n^5) / (n + 1)
  FamilyTrace c;  // Bidder One, day 1 (independent of x)
  FamilyTrace d;  // Bidder One, day 2 (encodes x)
  FamilyTrace e;  // Bidder Two, day 1 (encodes y); day 2 carries no mass
};

Integer reduction_b(int n);
Rational reduction_a(int n);

FamilyTrace bidder1_day1(int n);
FamilyTrace bidder1_day2(int n, const std::vector<int>& x);
FamilyTrace bidder2(int n, const std::vector<int>& y);

// The auction instance with n+2 values n^2+1, ..., n^2+n+2 per bidder.
// Bidder One splits mass 1/2 + 1/2 across days; Bidder Two is day-1 only.
Instance build_instance(const DisjInput& in, ReductionTrace* trace = nullptr);

}  // namespace auctionlab
