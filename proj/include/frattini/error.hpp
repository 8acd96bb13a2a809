#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace frattini {

/// Base class for every error raised by the library.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (cycle notation, group files, certificates).
class ParseError : public Error
{
public:
  explicit ParseError(std::string const &what, std::size_t line = 0)
  : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
    _line(line)
  {}

  /// 1-based line number, or 0 when the input is not line oriented.
  std::size_t line() const { return _line; }

private:
  std::size_t _line;
};

/// Operands that do not live on the same point set.
class DegreeMismatch : public Error
{
public:
  using Error::Error;
};

/// An element or subgroup that is required to lie in a group but does not.
class MembershipError : public Error
{
public:
  using Error::Error;
};

/// A closure grew past the configured enumeration cap.
class CapExceeded : public Error
{
public:
  using Error::Error;
};

/// A precondition on the mathematical input does not hold.
class PreconditionError : public Error
{
public:
  using Error::Error;
};

/// A self-check failed: the engine produced something that contradicts
/// standard theory. Never expected in practice.
class InternalError : public Error
{
public:
  using Error::Error;
};

} // namespace frattini
