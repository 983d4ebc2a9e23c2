#pragma once

#include <stdexcept>
#include <string>

namespace ikt {

/// Base of every error raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputError : Error {
  using Error::Error;
};

struct NotDominant : Error {
  using Error::Error;
};

/// A summed numerator was not divisible by the cleared denominator.
struct InexactDivision : Error {
  using Error::Error;
};

struct NotInvariant : Error {
  using Error::Error;
};

/// An induced class has a character outside the window basis.
struct WindowEscape : Error {
  using Error::Error;
};

/// A window weight exceeds the face bound of a cocharacter.
struct WindowViolation : Error {
  using Error::Error;
};

struct FaceMismatch : Error {
  using Error::Error;
};

struct NotOnFace : Error {
  using Error::Error;
};

struct DifferentLevi : Error {
  using Error::Error;
};

struct ContainmentHolds : Error {
  using Error::Error;
};

struct DecompositionFailure : Error {
  using Error::Error;
};

struct TooManyWeights : Error {
  using Error::Error;
};

}  // namespace ikt
