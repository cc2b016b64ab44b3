#pragma once

#include <stdexcept>
#include <string>

namespace fano {

/// Base class for every domain error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rank or variable-name mismatch between Laurent polynomials, or a vector of
/// the wrong length.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Tropicalization or minimum exponent requested for the zero polynomial.
class UndefinedTropicalizationError : public Error {
 public:
  using Error::Error;
};

class UnboundedPolytopeError : public Error {
 public:
  using Error::Error;
};

/// A Plücker ratio failed to restrict to a Laurent polynomial on the network
/// chart.
class ChartRestrictionError : public Error {
 public:
  using Error::Error;
};

/// A truncated-series coefficient outside its validity window was requested.
class UntrustedCoefficientError : public Error {
 public:
  using Error::Error;
};

class InconsistentPeriodsError : public Error {
 public:
  using Error::Error;
};

/// The recursion for theta series produced something that is not of the form
/// t^n + (negative powers).
class ReconstructionError : public Error {
 public:
  using Error::Error;
};

/// Invalid diagram, step set, box context or similar combinatorial input.
class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace fano
