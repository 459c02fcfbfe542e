#pragma once

#include <stdexcept>
#include <string>

namespace planch {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad argument to a library operation (wrong shape, out of range, ...).
struct InputError : Error {
  using Error::Error;
};

// Evaluation point violates the domain of an expression, e.g. a torus
// coordinate off the unit circle.
struct DomainError : Error {
  using Error::Error;
};

// A denominator vanishes (or nearly vanishes) at the evaluation point.
struct SingularityError : Error {
  using Error::Error;
};

// A reference into the invariants (cuspidal index, torus coordinate) is out
// of range.
struct IndexError : Error {
  using Error::Error;
};

// An operation needs a field of the input data that was not supplied.
struct MissingDataError : Error {
  using Error::Error;
};

// Operation defined only for segments of a single cuspidal block.
struct MixedCuspidalError : Error {
  using Error::Error;
};

// Two densities whose ratio was requested do not have matching torus parts.
struct NotProportionalError : Error {
  using Error::Error;
};

// Malformed textual input (JSON documents, scalar expressions, selectors).
struct ParseError : Error {
  using Error::Error;
};

}  // namespace planch
