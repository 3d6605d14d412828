#pragma once

#include <stdexcept>
#include <string>

namespace auctionlab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Instance validation.
struct ProbabilitySumError : Error {
  using Error::Error;
};
struct ValueOrderError : Error {
  using Error::Error;
};
struct NegativeProbabilityError : Error {
  using Error::Error;
};
struct LengthMismatchError : Error {
  using Error::Error;
};
struct IndexError : Error {
  using Error::Error;
};
struct ShapeError : Error {
  using Error::Error;
};

// Flows and mechanisms.
struct FlowInvalidError : Error {
  using Error::Error;
};
struct BoostTooLargeError : Error {
  using Error::Error;
};
struct NotMonotoneError : Error {
  using Error::Error;
};
struct InfeasibleTieSplitError : Error {
  using Error::Error;
};

// Single-dimensional distributions.
struct ZeroMassError : Error {
  using Error::Error;
};
struct ValueNotInSupportError : Error {
  using Error::Error;
};

// Linear programming.
struct InfeasibleError : Error {
  using Error::Error;
};
struct UnboundedError : Error {
  using Error::Error;
};

// Outcome selection and CLI.
struct BackendUnavailableError : Error {
  using Error::Error;
};
struct UsageError : Error {
  using Error::Error;
};

}  // namespace auctionlab
