#pragma once

#include <stdexcept>
#include <string>

namespace polycub {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument outside the mathematical domain of an operation
/// (invalid harmonic index, r outside the spline interval, unknown id).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Mismatched lengths or grid shapes.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A radial weight coefficient changes sign on [0, R].
class PseudoDefiniteError : public Error {
 public:
  using Error::Error;
};

/// A moment or norm integral does not converge (power-law exponent too small).
class DivergenceError : public Error {
 public:
  using Error::Error;
};

/// Invalid cubature parameters (even M, too few knots, negative inputs, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Failure of an iterative numerical procedure.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// Malformed or incomplete input files.
class InputError : public Error {
 public:
  using Error::Error;
};

}  // namespace polycub
