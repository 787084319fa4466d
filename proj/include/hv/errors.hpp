#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hv {

/// Division by zero and other undefined scalar operations.
class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Misuse of the API: mismatched configs, symbols that do not exist in a variant.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation's mathematical precondition does not hold for its input.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A table was asked for a symbol it does not cover.
class CoverageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::invalid_argument(what + " at offset " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace hv
