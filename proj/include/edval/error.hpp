#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace edval {

// Malformed input text or JSON. CLI exit code 2.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : std::runtime_error("at position " + std::to_string(position) + ": " + what),
        position_(position) {}
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_ = 0;
};

// Precondition of an operation violated. CLI exit code 3.
class ContractError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A computed value contradicts a proven statement (e.g. rho = d + 1).
// Never expected; CLI exit code 4.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace edval
