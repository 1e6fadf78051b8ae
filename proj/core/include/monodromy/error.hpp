#pragma once

#include <stdexcept>
#include <string>

namespace monodromy {

/// Shapes of the operands do not fit together. Always a caller bug.
class DimensionMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Well-formed input that lies outside an operation's domain
/// (non-unimodular matrix, non-symmetric block, boundary covector, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Text that could not be parsed into a word, matrix or rational.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A construction that is guaranteed to succeed did not.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace monodromy
