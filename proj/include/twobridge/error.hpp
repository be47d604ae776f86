#pragma once

#include <stdexcept>
#include <string>

namespace twobridge {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument violates an operation's precondition (out-of-range slope,
/// non-neighbouring Farey pair, unreduced word, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Text input that does not follow one of the documented formats.
class ParseError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A fixed-width integer computation would have wrapped.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// A self-check failed. Seeing one of these means the library has a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace twobridge
