#ifndef CATROUTE_ERRORS_HPP
#define CATROUTE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace catroute {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input. line() is 1-based, 0 when the format has no lines.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Well-formed input that violates a structural requirement (self-loop, id out of range, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Bad argument to an operation (vertex out of range, empty graph, ...).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// Operation requires a connected graph; a and b are mutually unreachable.
class DisconnectedError : public Error {
 public:
  DisconnectedError(std::size_t a, std::size_t b)
      : Error("graph is disconnected: vertex " + std::to_string(b) + " unreachable from " +
              std::to_string(a)),
        a_(a),
        b_(b) {}

  std::size_t first() const noexcept { return a_; }
  std::size_t second() const noexcept { return b_; }

 private:
  std::size_t a_;
  std::size_t b_;
};

/// A proven invariant failed to hold. Always an implementation bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

class GenerationError : public Error {
 public:
  using Error::Error;
};

}  // namespace catroute

#endif  // CATROUTE_ERRORS_HPP
