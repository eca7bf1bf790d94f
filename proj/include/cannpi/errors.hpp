#pragma once

#include <stdexcept>
#include <string>

namespace cannpi {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A caller-supplied value is outside the operation's domain (non-finite,
// out of range, bad precondition).
struct InputDomainError : Error {
  using Error::Error;
};

// Array sizes disagree with the declared geometry/architecture.
struct ShapeError : Error {
  using Error::Error;
};

// Population decoding asked for the angle of a zero (or cancelling)
// activity vector; atan2(0, 0) has no meaning.
struct ZeroActivityError : Error {
  using Error::Error;
};

// File contents are malformed, truncated, or inconsistent.
struct DataError : Error {
  using Error::Error;
};

// A computation produced non-finite values.
struct NumericError : Error {
  using Error::Error;
};

}  // namespace cannpi
