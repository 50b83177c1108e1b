#pragma once

#include <stdexcept>
#include <string>

namespace doob {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed arguments (bad parameters, out-of-range coordinates).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Two operands live in different graphs D(m,n).
class ParamMismatch : public Error {
 public:
  using Error::Error;
};

/// A vertex-count cap would be exceeded (see vertex_cap()).
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A set handed to a code constructor does not satisfy the code's definition.
class InvalidCode : public Error {
 public:
  using Error::Error;
};

/// Unparseable input file or vertex text.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed (e.g. a decomposition that does not
/// reconstruct its input). Always a library bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// An MDS code was found that is neither semilinear nor reducible.
class TheoremFalsification : public Error {
 public:
  using Error::Error;
};

}  // namespace doob
