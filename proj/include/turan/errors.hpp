#pragma once

#include <stdexcept>
#include <string>

namespace turan {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed forest spec text or graph input.
struct ParseError : Error {
  using Error::Error;
};

// Arguments outside the regime an operation is defined for
// (n too small, wrong forest class, ...).
struct DomainError : Error {
  using Error::Error;
};

// Graph order would exceed the 62-vertex capacity.
struct CapacityError : Error {
  using Error::Error;
};

// Forest class not covered by any theorem implemented here.
struct UnsupportedError : Error {
  using Error::Error;
};

}  // namespace turan
