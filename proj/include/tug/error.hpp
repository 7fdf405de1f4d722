#pragma once

#include <stdexcept>

namespace tug {

/// Base class for every error this library throws on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad player ids, coalitions outside the carrier,
/// parse failures, violated operation preconditions.
struct InputError : Error {
  using Error::Error;
};

/// A size cap was exceeded. Game storage stops at 16 players,
/// permutation sums at 10, core feasibility at 5.
struct CapError : Error {
  using Error::Error;
};

/// A convexity-requiring operation was handed a non-convex game.
struct ConvexityViolation : Error {
  using Error::Error;
};

/// An exact arithmetic result left the representable range.
struct OverflowError : Error {
  using Error::Error;
};

}  // namespace tug
