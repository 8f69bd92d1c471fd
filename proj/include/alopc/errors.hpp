#pragma once

#include <stdexcept>
#include <string>

namespace alopc {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value lies outside the domain of the selected group.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A matrix failed structural validation (shape, diagonal, reciprocity).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Incompatible arguments: group mismatch, dimension mismatch, or an
/// operation requested for a group that does not support it.
class MismatchError : public Error {
 public:
  using Error::Error;
};

/// A triad-based quantity was requested for a matrix with fewer than
/// three alternatives.
class NoTriadsError : public Error {
 public:
  using Error::Error;
};

/// An iterative solver exhausted its iteration budget.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// A matrix file or entry token could not be parsed.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace alopc
