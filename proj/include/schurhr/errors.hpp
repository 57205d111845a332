#pragma once

#include <stdexcept>
#include <string>

namespace schurhr {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad partition, out-of-range index, parse failure.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Well-formed input that violates a mathematical precondition
/// (non-Kähler reference form, non-ample bundle, singular pivot...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Raised when two objects from different ring models are combined.
class ModelMismatch : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

}  // namespace schurhr
