#include <doctest.h>

#include <cmath>
#include <random>

#include "support/oracles.hpp"
#include "yamabe/error.hpp"
#include "yamabe/geometry/grid.hpp"
#include "yamabe/geometry/reduced.hpp"

using namespace yamabe::geometry;

namespace {

// Weighted L1 and max errors of S~ against a closed form sampled at the nodes.
struct Errors {
  double l1 = 0.0;
  double max = 0.0;
};

template <class V, class S>
Errors scalar_errors(std::size_t n, V&& v, S&& exact, std::size_t skip_left = 0) {
  const auto g = RadialGrid::build(n);
  std::vector<double> vals(n);
  for (std::size_t i = 0; i < n; ++i) vals[i] = v(g.centers()[i]);
  const auto s = scalar_from_v(g, vals);
  Errors e;
  for (std::size_t i = skip_left; i < n; ++i) {
    const double d = std::abs(s[i] - exact(g.centers()[i]));
    e.l1 += g.weights()[i] * d;
    e.max = std::max(e.max, d);
  }
  return e;
}

}  // namespace

TEST_CASE("constant conformal factor has S~ = 2x / c^2") {
  for (double c : {1.0, std::sqrt(2.0), 3.0}) {
    const auto g = RadialGrid::build(64, Grading::geometric, 0.95);
    const std::vector<double> v(g.size(), c);
    const auto s = scalar_from_v(g, v);
    // The flux form is exact for x v linear, so S~ is 2x/c^2 at the midpoints.
    for (std::size_t i = 0; i < g.size(); ++i)
      CHECK(s[i] == doctest::Approx(2.0 * g.midpoints()[i] / (c * c)).epsilon(1e-12));
    // E = c^2 \int (1 - x^2) dx = 2c^2/3 up to the midpoint-rule error; Vol = c^4 / 2
    CHECK(energy(g, v) == doctest::Approx(2.0 * c * c / 3.0).epsilon(g.max_width() * g.max_width()));
    CHECK(reduced_volume(g, v) == doctest::Approx(c * c * c * c / 2.0).epsilon(1e-14));
  }
}

TEST_CASE("S~ converges at second order") {
  const auto v = [](double x) { return 1.0 + x * x; };
  // -((1 - x^2)(1 + 3x^2))' / v^3
  const auto exact = [](double x) { return -(4.0 * x - 12.0 * x * x * x) / std::pow(1.0 + x * x, 3); };
  std::vector<double> l1, mx;
  for (std::size_t n : {32u, 64u, 128u, 256u, 512u}) {
    const auto e = scalar_errors(n, v, exact);
    l1.push_back(e.l1);
    mx.push_back(e.max);
  }
  for (double r : testing_support::observed_ratios(l1)) CHECK(r >= 3.5);

  std::vector<double> c_l1;
  for (std::size_t n : {32u, 64u, 128u, 256u, 512u})
    c_l1.push_back(scalar_errors(n, [](double) { return std::sqrt(2.0); }, [](double x) { return x; }).l1);
  for (double r : testing_support::observed_ratios(c_l1)) CHECK(r >= 3.5);
}

TEST_CASE("Green-shaped profile is curvature free away from the boundary") {
  const auto g = RadialGrid::build(512);
  std::vector<double> v(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) v[i] = green_kernel(g.centers()[i]);
  const auto s = scalar_from_v(g, v);
  double worst = 0.0;
  for (std::size_t i = 0; g.centers()[i] < 0.9; ++i) worst = std::max(worst, std::abs(s[i]));
  CHECK(worst < 1e-4);
}

TEST_CASE("summation by parts identity is exact") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(0.2, 3.0);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = RadialGrid::build(8 + trial * 13, trial % 2 ? Grading::geometric : Grading::uniform, 0.93);
    std::vector<double> v(g.size());
    for (double& x : v) x = u(rng);
    const auto s = scalar_from_v(g, v);
    double lhs = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) lhs += g.weights()[i] * s[i] * std::pow(v[i], 4);
    CHECK(lhs == doctest::Approx(energy(g, v)).epsilon(1e-12));
  }
}

TEST_CASE("face fluxes vanish at x = 1") {
  const auto g = RadialGrid::build(16);
  const std::vector<double> v(16, 1.3);
  const auto f = face_fluxes(g, v);
  REQUIRE(f.size() == 17);
  CHECK(f.back() == 0.0);
  CHECK(xv_jumps(g, v)[0] == doctest::Approx(1.3 * g.midpoints()[0]));
  CHECK_THROWS_AS(scalar_from_v(g, std::vector<double>(16, -1.0)), yamabe::DomainError);
  CHECK_THROWS_AS(scalar_from_v(g, std::vector<double>(15, 1.0)), yamabe::DomainError);
}

TEST_CASE("Green kernel") {
  CHECK(green_kernel(0.0) == 2.0);
  CHECK(green_kernel(1e-9) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(green_kernel(0.5) == doctest::Approx(2.0 * std::log(3.0)).epsilon(1e-15));
  // continuity across the series switch
  CHECK(green_kernel(0.99999e-4) == doctest::Approx(green_kernel(1.00001e-4)).epsilon(1e-12));
  CHECK_THROWS_AS(green_kernel(1.0), yamabe::DomainError);

  for (std::size_t n : {8u, 100u, 512u}) {
    const auto w = green_cell_weights(RadialGrid::build(n, Grading::geometric, 0.9));
    double s = 0.0;
    for (double x : w) s += x;
    CHECK(s == doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-13));
  }

  // x = 1 - e^{-t} moves the log singularity to infinity; midpoint rule on a long interval
  const double oracle = testing_support::midpoint_rule(
      [](double t) {
        const double x = -std::expm1(-t);
        const double g = x < 1e-4 ? green_kernel(x) : (std::log1p(x) + t) / x;
        return g * g * g * g * x * std::exp(-t);
      },
      0.0, 80.0, 400000);
  CHECK(green_l4_moment() == doctest::Approx(oracle).epsilon(1e-9));
  CHECK(std::isfinite(green_l4_moment()));
}
