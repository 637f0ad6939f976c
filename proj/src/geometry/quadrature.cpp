#include "yamabe/geometry/quadrature.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "yamabe/error.hpp"

namespace yamabe::geometry::quad {

namespace {

void check(double value, double err, double l1, double rel_tol, const char* what) {
  if (!std::isfinite(value))
    throw ConvergenceError(std::string(what) + ": non-finite quadrature result");
  // tanh-sinh error estimates are pessimistic by roughly one level; accept a
  // modest margin against the L1 norm of the integrand.
  const double scale = std::max(std::abs(value), l1);
  if (err > 100.0 * rel_tol * scale + std::numeric_limits<double>::min())
    throw ConvergenceError(std::string(what) + ": error estimate " + std::to_string(err) +
                           " exceeds tolerance");
}

// Boost reports NaN evaluations and bad bounds through its own exceptions.
template <class Call>
double guarded(Call&& call, const char* what) {
  try {
    return call();
  } catch (const boost::math::evaluation_error& e) {
    throw ConvergenceError(std::string(what) + ": " + e.what());
  } catch (const std::domain_error& e) {
    throw ConvergenceError(std::string(what) + ": " + e.what());
  }
}

}  // namespace

Result half_line(const std::function<double(double)>& f, double rel_tol) {
  boost::math::quadrature::tanh_sinh<double> integrator;
  double err = 0.0, l1 = 0.0;
  std::size_t levels = 0;
  const double value = guarded(
      [&] {
        return integrator.integrate(f, 0.0, std::numeric_limits<double>::infinity(), rel_tol,
                                    &err, &l1, &levels);
      },
      "half-line quadrature");
  check(value, err, l1, rel_tol, "half-line quadrature");
  return {value, err, levels};
}

Result interval(const std::function<double(double, double)>& f, double a, double b,
                double rel_tol) {
  boost::math::quadrature::tanh_sinh<double> integrator;
  double err = 0.0, l1 = 0.0;
  std::size_t levels = 0;
  const double value = guarded(
      [&] { return integrator.integrate(f, a, b, rel_tol, &err, &l1, &levels); },
      "interval quadrature");
  check(value, err, l1, rel_tol, "interval quadrature");
  return {value, err, levels};
}

Result interval(const std::function<double(double)>& f, double a, double b, double rel_tol) {
  return interval([&f](double x, double) { return f(x); }, a, b, rel_tol);
}

}  // namespace yamabe::geometry::quad
