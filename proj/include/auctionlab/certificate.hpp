#pragma once

#include <string>
#include <vector>

#include "auctionlab/rational.hpp"

namespace auctionlab {

// One verified (in)equality. `where` carries machine-readable coordinates
// (bidder, level, interest, ...) whose meaning depends on `condition`.
struct Check {
  std::string condition;
  std::string location;
  Rational lhs;
  Rational rhs;
  bool pass = false;
  std::vector<long long> where;
};

struct CertificateReport {
  bool passed = true;
  std::vector<Check> checks;

  void add(Check c) {
    passed = passed && c.pass;
    checks.push_back(std::move(c));
  }
  void add(const std::string& condition, const std::string& location, Rational lhs, Rational rhs,
           bool pass, std::vector<long long> where = {}) {
    add(Check{condition, location, std::move(lhs), std::move(rhs), pass, std::move(where)});
  }
  std::vector<const Check*> failures() const {
    std::vector<const Check*> out;
    for (const auto& c : checks)
      if (!c.pass) out.push_back(&c);
    return out;
  }
};

}  // namespace auctionlab
