#pragma once

#include <stdexcept>
#include <string>

namespace spherekit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A numeric argument is outside the supported domain (n < 2, mu not in {0,1}, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Parameters are well formed but describe a construction we do not support.
class UnsupportedParameters : public Error {
 public:
  using Error::Error;
};

/// A function value needed by a construction is infinite or undefined.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An iterative solver failed to converge.
class NumericFailure : public Error {
 public:
  using Error::Error;
};

/// An operation's documented precondition does not hold for the given input.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A bound hypothesis (derivative signs, design strength, dot-product set) failed.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

/// Two computations that must agree did not. Always indicates a bug or a
/// tolerance that is too tight for the input, never a valid outcome.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

/// Malformed input document or a WeightedCode invariant violated on load.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A file could not be opened, read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace spherekit
