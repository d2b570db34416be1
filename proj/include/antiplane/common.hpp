#pragma once

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace antiplane {

using cplx = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr cplx kI{0.0, 1.0};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid model parameters.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A stage of the solve could not produce a consistent result.
class SolverError : public Error {
 public:
  using Error::Error;
};

// Evaluation requested exactly at a pole of the evaluated function.
class PoleError : public Error {
 public:
  using Error::Error;
};

}  // namespace antiplane
