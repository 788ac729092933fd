#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace liouville {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different coefficient domains.
class DomainMismatch : public Error {
 public:
  using Error::Error;
};

/// A value cannot be represented in the requested domain (e.g. 1/2 in Z).
class NotInDomain : public Error {
 public:
  using Error::Error;
};

class NotAUnit : public Error {
 public:
  using Error::Error;
};

/// The operation needs a rank but the function is zero at its bound.
class RankNotVisible : public Error {
 public:
  using Error::Error;
};

/// Index, bound or element argument outside the permitted range.
class OutOfRange : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class UnknownFunction : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input. `line()` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line);

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace liouville
