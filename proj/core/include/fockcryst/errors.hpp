#pragma once

#include <stdexcept>
#include <string>

namespace fockcryst {

// Malformed user input (text syntax, flags). CLI maps this to a usage error.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A precondition of an operation does not hold for the given arguments.
class ComputationError : public std::runtime_error {
 public:
  explicit ComputationError(const std::string& what) : std::runtime_error(what) {}
};

// An internal invariant failed. These indicate a convention violation or a
// bug, never bad input; they carry diagnostics and are deliberately loud.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace fockcryst
