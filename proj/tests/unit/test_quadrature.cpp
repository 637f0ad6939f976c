#include <doctest.h>

#include <cmath>
#include <numbers>

#include "yamabe/error.hpp"
#include "yamabe/geometry/quadrature.hpp"

namespace quad = yamabe::geometry::quad;
using std::numbers::pi;

TEST_CASE("half-line rules reproduce Gamma-function integrals") {
  // \int_0^inf e^{-t} t^3 dt = 6
  CHECK(quad::half_line([](double t) { return std::exp(-t) * t * t * t; }).value ==
        doctest::Approx(6.0).epsilon(1e-12));
  // \int_0^inf dt / (1 + t^2) = pi / 2
  CHECK(quad::half_line([](double t) { return 1.0 / (1.0 + t * t); }).value ==
        doctest::Approx(pi / 2).epsilon(1e-12));
}

TEST_CASE("interval rule tolerates endpoint singularities") {
  // \int_0^1 log(x) dx = -1
  CHECK(quad::interval([](double x) { return std::log(x); }, 0.0, 1.0).value ==
        doctest::Approx(-1.0).epsilon(1e-12));
  // \int_0^1 dx / sqrt(1 - x), complement form
  const auto r = quad::interval(
      [](double x, double xc) { return 1.0 / std::sqrt(x < 0.5 ? 1.0 - x : xc); }, 0.0, 1.0);
  CHECK(r.value == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("non-integrable input is reported as non-convergence") {
  CHECK_THROWS_AS(quad::half_line([](double t) { return 1.0 / (1.0 + t); }, 1e-12),
                  yamabe::ConvergenceError);
}
