#pragma once

#include <Eigen/Core>

#include "auctionlab/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<auctionlab::Rational> : GenericNumTraits<auctionlab::Rational> {
  using Real = auctionlab::Rational;
  using NonInteger = auctionlab::Rational;
  using Nested = auctionlab::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100,
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace auctionlab {

using RatMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RatVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

}  // namespace auctionlab
