#ifndef IMSETS_ERROR_HPP
#define IMSETS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace imsets {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad graph text, vertex outside the universe, wrong graph
/// class for an operation, invalid triplet.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A size guard was exceeded (universe too large, too many triangulations).
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. Always a defect.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// Integer overflow in imset arithmetic.
class Overflow : public Error {
 public:
  using Error::Error;
};

}  // namespace imsets

#endif  // IMSETS_ERROR_HPP
