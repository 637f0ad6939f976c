#pragma once

#include <stdexcept>
#include <string>

namespace yamabe {

// Base for every failure the library signals.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation (x = 0 in r_of_x,
// nonpositive conformal factor, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Bad configuration or malformed input data.
class InputError : public Error {
 public:
  using Error::Error;
};

// An explicit step produced w = v^3 <= 0 somewhere.
class PositivityLoss : public Error {
 public:
  PositivityLoss(std::size_t cell, double value)
      : Error("positivity lost at cell " + std::to_string(cell) +
              " (w = " + std::to_string(value) + ")"),
        cell_(cell), value_(value) {}

  std::size_t cell() const noexcept { return cell_; }
  double value() const noexcept { return value_; }

 private:
  std::size_t cell_;
  double value_;
};

// Quadrature or iterative solver failed to reach its tolerance.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace yamabe
