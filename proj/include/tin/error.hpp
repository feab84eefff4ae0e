#pragma once

#include <stdexcept>
#include <string>

namespace tin {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an input value does not hold (bad edge, bad parameter, ...).
class InvalidInput : public Error {
public:
  using Error::Error;
};

/// Text input could not be parsed. `line` is 1-based, 0 when unknown.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/// An exact routine was asked to run beyond its configured size cap.
/// Exact solvers refuse instead of approximating.
class CapExceeded : public Error {
public:
  using Error::Error;
};

/// The decomposition handed to a solver is not a tree decomposition of the graph.
class InvalidDecomposition : public Error {
public:
  using Error::Error;
};

/// A bag holds an independent set larger than the promised residual bound k.
class ResidualBoundViolated : public Error {
public:
  using Error::Error;
};

} // namespace tin
