#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bookfree {

/// A construction or query parameter violates its documented precondition.
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The input is outside the domain of the operation (disconnected graph
/// where a Perron hub is required, vertex not in the expected set, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Exhaustive enumeration was asked for an order it cannot handle.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Malformed graph6 input. `offset()` is the zero-based byte position of
/// the first offending byte.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace bookfree
