#include <doctest.h>

#include <cmath>
#include <numbers>

#include "yamabe/error.hpp"
#include "yamabe/geometry/sphere.hpp"
#include "yamabe/variational/quotient.hpp"
#include "yamabe/variational/thresholds.hpp"

using yamabe::geometry::SphereModel;
using yamabe::geometry::sphere_volume;
using std::numbers::pi;

TEST_CASE("sphere volumes") {
  CHECK(sphere_volume(1) == doctest::Approx(2 * pi));
  CHECK(sphere_volume(2) == doctest::Approx(4 * pi));
  CHECK(sphere_volume(3) == doctest::Approx(2 * pi * pi));
  CHECK(sphere_volume(4) == doctest::Approx(8 * pi * pi / 3));
}

TEST_CASE("polar cells carry the exact measure") {
  for (int n : {3, 4, 6}) {
    for (std::size_t cells : {8u, 64u, 512u}) {
      const SphereModel s(n, cells);
      CHECK(std::abs(s.total_measure() / sphere_volume(n) - 1.0) < 1e-13);
      CHECK(s.conductances()[0] == 0.0);
      for (std::size_t k = 1; k < cells; ++k) CHECK(s.conductances()[k] > 0.0);
      CHECK(s.scalar_curvature() == n * (n - 1.0));
    }
  }
  CHECK_THROWS_AS(SphereModel(2, 64), yamabe::InputError);
  CHECK_THROWS_AS(SphereModel(4, 4), yamabe::InputError);
}

TEST_CASE("continuous sphere quotient") {
  namespace var = yamabe::variational;
  const auto one = [](double) { return 1.0; };
  const auto zero = [](double) { return 0.0; };
  CHECK(std::abs(var::yamabe_quotient_sphere(one, zero, 4) / (8 * std::sqrt(6.0) * pi) - 1.0) < 1e-6);
  CHECK(std::abs(var::yamabe_quotient_sphere(one, zero, 3) /
                     (6 * std::pow(2 * pi * pi, 2.0 / 3.0)) - 1.0) < 1e-6);
  for (int n : {3, 4, 5}) CHECK(var::yamabe_quotient_sphere(one, zero, n) ==
                               doctest::Approx(var::sphere_yamabe_constant(n)).epsilon(1e-10));

  // Constants minimize; a conformal bubble attains the same value.
  const auto bump = [](double t) { return 1.0 + 0.3 * std::cos(2 * t); };
  const auto dbump = [](double t) { return -0.6 * std::sin(2 * t); };
  CHECK(var::yamabe_quotient_sphere(bump, dbump, 4) > var::sphere_yamabe_constant(4));
  const double b = 0.4;
  const auto conf = [b](double t) { return 1.0 / (1.0 + b * std::cos(t)); };
  const auto dconf = [b](double t) { return b * std::sin(t) / std::pow(1.0 + b * std::cos(t), 2); };
  CHECK(var::yamabe_quotient_sphere(conf, dconf, 4) ==
        doctest::Approx(var::sphere_yamabe_constant(4)).epsilon(1e-9));
  CHECK_THROWS_AS(var::yamabe_quotient_sphere(zero, zero, 4), yamabe::DomainError);
}
