// Exception types shared across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace gft {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Series division needs a unit constant term.
struct DivisionByNonUnit : Error {
  using Error::Error;
};

// exp/integrate need a series vanishing at the origin.
struct NonzeroConstantTerm : Error {
  using Error::Error;
};

// z/(1 - alpha z^2) evaluated at a zero of the denominator.
struct PoleAtZ : Error {
  using Error::Error;
};

// The scanned function vanishes at a sample point, so zf'/f is undefined.
struct ZeroOfFOnGrid : Error {
  using Error::Error;
};

// |c| = 1 makes the two-term image-disc endpoints undefined.
struct DegenerateModulus : Error {
  using Error::Error;
};

// Subordination requires both functions to share the value at 0.
struct BaseMismatch : Error {
  using Error::Error;
};

}  // namespace gft
