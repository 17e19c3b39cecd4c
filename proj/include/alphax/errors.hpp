#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace alphax {

/// A value lies outside the range an operation is defined on.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Construction parameters that no graph can satisfy.
class FeasibilityError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An exhaustive operation was asked to run above its configured size cap.
class CapError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Malformed textual input; carries the byte offset of the first bad byte.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at offset " + std::to_string(offset)),
        detail_(what),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }
  /// Message without the offset suffix.
  const std::string& detail() const { return detail_; }

 private:
  std::string detail_;
  std::size_t offset_;
};

}  // namespace alphax
