#pragma once

#include <stdexcept>
#include <string>

namespace polyzeta {

/// Base of every mathematical-domain failure. The CLI maps these to exit code 3.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Words or polynomials over different alphabet kinds were combined, or a bracket
/// was applied outside the alphabet it is defined on.
class AlphabetMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An encoded word does not have the shape (x0^* XForm)^+.
class ShapeError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Division by a zero color or similar.
class ArithmeticError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Parameters outside the convergence domain of the nested series.
class DivergenceError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Duffle expansion requested on shift tuples that are not one common constant.
class DiagonalViolation : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Malformed serialized input. The CLI maps these to exit code 2.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace polyzeta
