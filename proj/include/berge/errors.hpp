#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace berge {

// Malformed input data (bad hypergraph, vertex out of range, path not in graph).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A documented precondition of an operation does not hold for otherwise
// well-formed input (e.g. a graph that is not 2-connected).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A bounded search ran out of node expansions before reaching a verdict.
class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The hypergraph has no Berge cycle at all.
class NoCycleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Text/JSON instance file could not be parsed; carries a 1-based line number
// (0 when the error is not tied to a line).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace berge
