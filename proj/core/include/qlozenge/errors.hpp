#pragma once

#include <stdexcept>
#include <string>

namespace qlozenge {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A quotient of polynomials that is not itself a polynomial.
class NonExactDivision : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// Dent positions of a semihexagon are duplicated, unsorted or out of range.
class BadDents : public Error {
 public:
  using Error::Error;
};

/// A builder produced a region with #Up != #Down, or a hole outside its frame.
class Unbalanced : public Error {
 public:
  using Error::Error;
};

/// Some triangle has no lozenge that can cover it.
class Untileable : public Error {
 public:
  using Error::Error;
};

class SeparatingViolated : public Error {
 public:
  using Error::Error;
};

class NotBalanced : public Error {
 public:
  using Error::Error;
};

/// The region lacks the reference side a weight assignment measures from.
class MissingFrame : public Error {
 public:
  using Error::Error;
};

/// Triangle budget or frontier state budget exhausted.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Kuo marks with the wrong orientations or not in cyclic boundary order.
class BadMarks : public Error {
 public:
  using Error::Error;
};

class NegativeVolume : public Error {
 public:
  using Error::Error;
};

}  // namespace qlozenge
