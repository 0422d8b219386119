#pragma once

#include <stdexcept>
#include <string>

namespace nilmassey {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ModulusMismatch : public Error {
 public:
  ModulusMismatch() : Error("operands have different moduli") {}
};

class NotAUnit : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class DegreeMismatch : public Error {
 public:
  using Error::Error;
};

class NotGrouplike : public Error {
 public:
  using Error::Error;
};

class NotLie : public Error {
 public:
  using Error::Error;
};

class NotInV : public Error {
 public:
  using Error::Error;
};

class NotACocycle : public Error {
 public:
  using Error::Error;
};

class BadCharacter : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Raised when a structure fails validation; the message names the witness.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// An identity that the mathematics guarantees did not hold. Always a bug.
class InternalCheckFailed : public Error {
 public:
  using Error::Error;
};

}  // namespace nilmassey
