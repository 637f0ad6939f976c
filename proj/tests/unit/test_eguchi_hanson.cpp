#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "support/oracles.hpp"
#include "yamabe/error.hpp"
#include "yamabe/geometry/eguchi_hanson.hpp"
#include "yamabe/geometry/grid.hpp"

using yamabe::geometry::EguchiHansonModel;
using yamabe::geometry::RadialFunction;
using std::numbers::pi;

namespace {

// Radial Laplacian from the volume density r^3 and g^{rr} = sqrt(r^4 + a^4) / r^2,
// evaluated with nested central differences in r.
double fd_laplacian(const std::function<double(double)>& f, double r, double a) {
  const double h = 1e-4 * std::max(1.0, r);
  const auto flux = [&](double rr) {
    const double fr = (f(rr + h) - f(rr - h)) / (2.0 * h);
    return rr * std::sqrt(rr * rr * rr * rr + a * a * a * a) * fr;
  };
  return (flux(r + h) - flux(r - h)) / (2.0 * h) / (r * r * r);
}

}  // namespace

TEST_CASE("conformal factor and the x coordinate") {
  const EguchiHansonModel m(1.0);
  CHECK(m.psi(0.0) == 1.0);
  CHECK(m.x_of_r(0.0) == 1.0);
  CHECK(m.x_of_r(1.0) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(m.r_of_x(1.0 / std::sqrt(2.0)) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(m.r_of_x(0.0), yamabe::DomainError);
  CHECK_THROWS_AS(m.x_of_r(-1.0), yamabe::DomainError);
  CHECK_THROWS_AS(EguchiHansonModel(0.0), yamabe::DomainError);

  for (double a : {0.5, 1.0, 3.0}) {
    const EguchiHansonModel ma(a);
    // psi r^2 -> a^2 at infinity
    CHECK(ma.psi(1e4) * 1e8 == doctest::Approx(a * a).epsilon(1e-10));
    for (double x : {1e-6, 0.1, 0.5, 0.9, 1.0})
      CHECK(ma.x_of_r(ma.r_of_x(x)) == doctest::Approx(x).epsilon(1e-12));
  }
}

TEST_CASE("scalar curvature of the compactified metric") {
  const EguchiHansonModel m(1.0);
  CHECK(m.scalar_curvature(0.0) == 48.0);
  CHECK(m.scalar_curvature(1.0) == doctest::Approx(48.0 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(m.scalar_curvature(1e6) < 1e-10);
}

TEST_CASE("radial Laplacian against a finite-difference oracle") {
  for (double a : {0.7, 1.0, 2.0}) {
    const EguchiHansonModel m(a);
    const auto psi = m.psi_radial();
    const RadialFunction r2{[](double s) { return s; }, [](double) { return 1.0; },
                            [](double) { return 0.0; }};
    const RadialFunction cst{[](double) { return 3.0; }, [](double) { return 0.0; },
                             [](double) { return 0.0; }};
    for (double r : {0.3, 1.0, 1.7, 4.0}) {
      CAPTURE(a);
      CAPTURE(r);
      const double fd_psi = fd_laplacian([&](double rr) { return m.psi(rr); }, r, a);
      CHECK(m.laplacian_radial(psi, r) == doctest::Approx(fd_psi).epsilon(1e-6));
      const double fd_r2 = fd_laplacian([](double rr) { return rr * rr; }, r, a);
      CHECK(m.laplacian_radial(r2, r) == doctest::Approx(fd_r2).epsilon(1e-6));
      CHECK(m.laplacian_radial(cst, r) == 0.0);
      // Ricci-flat background: S_psi = -6 Delta psi / psi^3
      const double p = m.psi(r);
      CHECK(-6.0 * m.laplacian_radial(psi, r) / (p * p * p) ==
            doctest::Approx(m.scalar_curvature(r)).epsilon(1e-12));
    }
  }
  const EguchiHansonModel m(1.0);
  for (double r : {0.5, 1.0, 2.0})
    CHECK(m.laplacian_radial(m.psi_radial(), r) ==
          doctest::Approx(-8.0 / std::pow(1.0 + std::pow(r, 4), 2)).epsilon(1e-13));
  CHECK_THROWS_AS(m.laplacian_radial(m.psi_radial(), 0.0), yamabe::DomainError);
}

TEST_CASE("volume and curvature energy") {
  CHECK(EguchiHansonModel(1.0).volume() == doctest::Approx(pi * pi / 4).epsilon(1e-15));
  CHECK(EguchiHansonModel(2.0).volume() == doctest::Approx(4 * pi * pi).epsilon(1e-15));
  for (double a : {0.5, 1.0, 2.0}) {
    const EguchiHansonModel m(a);
    CHECK(std::abs(m.volume_by_quadrature() / m.volume() - 1.0) < 1e-8);
  }
  for (double a : {0.5, 1.0, 2.0, 3.0}) {
    const double e = EguchiHansonModel(a).scalar_l2_energy();
    CHECK(std::abs(e / (288 * pi * pi) - 1.0) < 1e-6);
    CHECK(std::sqrt(e) > 8 * std::sqrt(3.0) * pi);
  }
}

TEST_CASE("distances match the Beta-function oracle") {
  const double d1 = EguchiHansonModel(1.0).distance_to_infinity();
  CHECK(std::abs(d1 / testing_support::distance_beta_oracle(1.0) - 1.0) < 1e-8);
  CHECK(EguchiHansonModel(2.0).distance_to_infinity() == doctest::Approx(2.0 * d1).epsilon(1e-12));
  // The same geodesic measured from the orbifold side.
  for (double a : {0.5, 1.0, 2.0}) {
    const EguchiHansonModel m(a);
    CHECK(m.distance_from_singular_point(1.0) ==
          doctest::Approx(m.distance_to_infinity()).epsilon(1e-10));
    CHECK(m.distance_from_singular_point(0.0) == 0.0);
    // near the orbifold point the metric is flat: d ~ a sqrt(x)
    CHECK(m.distance_from_singular_point(1e-8) == doctest::Approx(a * 1e-4).epsilon(1e-10));
  }
}

TEST_CASE("volume of small balls at the orbifold point is that of R^4 / Z2") {
  const EguchiHansonModel m(1.0);
  const auto g = yamabe::geometry::RadialGrid::build(512, yamabe::geometry::Grading::geometric, 0.98);
  const std::vector<double> radii = {0.02, 0.05, 0.1, 0.5, 1.0, 5.0};
  const auto ratios = yamabe::geometry::ahlfors_ratios_at_singular_point(m, g, radii);
  CHECK(ratios[0] == doctest::Approx(pi * pi / 4).epsilon(1e-3));
  CHECK(ratios[1] == doctest::Approx(pi * pi / 4).epsilon(1e-3));
  // Ahlfors regularity: bounded above and below on the whole range
  for (double q : ratios) {
    CHECK(q > 0.0);
    CHECK(q < pi * pi);
  }
  CHECK(ratios.back() == doctest::Approx(m.volume() / std::pow(5.0, 4)).epsilon(1e-12));
}

TEST_CASE("unit conversion factors") {
  const EguchiHansonModel m(2.0);
  CHECK(m.volume_factor() == doctest::Approx(8.0 * pi * pi));
  CHECK(m.curvature_factor() == doctest::Approx(6.0));
  // \int_0^1 x dx times the factor is the volume
  CHECK(m.volume_factor() * 0.5 == doctest::Approx(m.volume()));
}
