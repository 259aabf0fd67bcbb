#pragma once

#include <stdexcept>
#include <string>

namespace kneading {

/// Malformed textual input (sequence, address or itinerary syntax).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value violates the precondition of the operation it was passed to.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Internal inconsistency of a constructed object. Always a bug.
class StructuralError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The tree-level classification disagrees with the symbolic prediction.
class CrossCheckError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace kneading
