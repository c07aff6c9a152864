#pragma once

#include <stdexcept>
#include <string>

namespace maxmin {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range textual input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Operand dimensions do not agree.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition on the operands does not hold.
class ContractError : public Error {
 public:
  using Error::Error;
};

/// A brute-force enumeration would exceed its configured point cap.
class SizeCapError : public Error {
 public:
  using Error::Error;
};

}  // namespace maxmin
