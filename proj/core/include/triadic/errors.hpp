#pragma once
#include <stdexcept>
#include <string>

namespace triadic {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input text (context files, implication strings, JSON).
struct ParseError : Error {
  using Error::Error;
};

// A name was used that is not a member of the relevant universe.
struct ReferenceError : Error {
  using Error::Error;
};

// An operation whose cost is exponential in the universe sizes was asked to
// run beyond its guard.
struct SizeGuardError : Error {
  using Error::Error;
};

// An implication or base of the wrong kind was passed to an operation.
struct KindError : Error {
  using Error::Error;
};

// trace() was asked for a goal the given base does not entail.
struct NotEntailedError : Error {
  using Error::Error;
};

}  // namespace triadic
