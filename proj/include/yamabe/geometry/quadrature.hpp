#pragma once

#include <cstddef>
#include <functional>

namespace yamabe::geometry::quad {

struct Result {
  double value;
  double error_estimate;
  std::size_t levels;
};

inline constexpr double default_tolerance = 1e-13;

// Double-exponential (tanh-sinh) quadrature. Both routines tolerate integrable
// endpoint singularities; non-convergence to `rel_tol` throws ConvergenceError.

// Integral over [0, inf).
Result half_line(const std::function<double(double)>& f, double rel_tol = default_tolerance);

// Integral over [a, b]. `f(x, xc)` also receives the signed complement
// xc = a - x near a (xc <= 0) or xc = b - x near b (xc >= 0), so integrands
// singular at an endpoint can be evaluated without cancellation.
Result interval(const std::function<double(double, double)>& f, double a, double b,
                double rel_tol = default_tolerance);

Result interval(const std::function<double(double)>& f, double a, double b,
                double rel_tol = default_tolerance);

}  // namespace yamabe::geometry::quad
