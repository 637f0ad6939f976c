#include "yamabe/geometry/reduced.hpp"

#include <cmath>
#include <string>

#include "yamabe/error.hpp"
#include "yamabe/geometry/quadrature.hpp"

namespace yamabe::geometry {

std::vector<double> xv_jumps(const RadialGrid& grid, std::span<const double> v) {
  const auto m = grid.midpoints();
  const std::size_t n = grid.size();
  std::vector<double> jumps(n);
  jumps[0] = m[0] * v[0];
  for (std::size_t k = 1; k < n; ++k) jumps[k] = m[k] * v[k] - m[k - 1] * v[k - 1];
  return jumps;
}

std::vector<double> face_fluxes(const RadialGrid& grid, std::span<const double> v) {
  const auto faces = grid.faces();
  const std::size_t n = grid.size();
  const auto jumps = xv_jumps(grid, v);
  std::vector<double> flux(n + 1, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    const double x = faces[k];
    flux[k] = (1.0 - x) * (1.0 + x) * jumps[k] / grid.face_spacing(k);
  }
  flux[n] = 0.0;
  return flux;
}

ScalarField scalar_from_v(const RadialGrid& grid, std::span<const double> v) {
  const std::size_t n = grid.size();
  if (v.size() != n) throw DomainError("scalar_from_v: field length does not match grid");
  for (std::size_t i = 0; i < n; ++i)
    if (!(v[i] > 0.0))
      throw DomainError("scalar_from_v: v must be positive (cell " + std::to_string(i) + ")");
  const auto flux = face_fluxes(grid, v);
  const auto h = grid.widths();
  ScalarField s(n);
  for (std::size_t i = 0; i < n; ++i)
    s[i] = -(flux[i + 1] - flux[i]) / (h[i] * v[i] * v[i] * v[i]);
  return s;
}

double energy(const RadialGrid& grid, std::span<const double> v) {
  const auto faces = grid.faces();
  const auto jumps = xv_jumps(grid, v);
  double e = 0.0;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double x = faces[k];
    e += (1.0 - x) * (1.0 + x) * jumps[k] * jumps[k] / grid.face_spacing(k);
  }
  return e;
}

double reduced_volume(const RadialGrid& grid, std::span<const double> v) {
  const auto w = grid.weights();
  double vol = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double v2 = v[i] * v[i];
    vol += w[i] * v2 * v2;
  }
  return vol;
}

double green_kernel(double x) {
  if (x < 0.0 || x >= 1.0)
    throw DomainError("green_kernel: x must lie in [0,1), got " + std::to_string(x));
  if (x < 1e-4) {
    const double x2 = x * x;
    return 2.0 * (1.0 + x2 / 3.0 + x2 * x2 / 5.0);
  }
  return 2.0 * std::atanh(x) / x;
}

namespace {

// Antiderivative of log((1+x)/(1-x)) = G(x) x.
double green_antiderivative(double x) {
  const double right = (x < 1.0) ? (1.0 - x) * std::log1p(-x) : 0.0;
  return (1.0 + x) * std::log1p(x) + right;
}

}  // namespace

std::vector<double> green_cell_weights(const RadialGrid& grid) {
  const auto faces = grid.faces();
  std::vector<double> w(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i)
    w[i] = green_antiderivative(faces[i + 1]) - green_antiderivative(faces[i]);
  return w;
}

double green_l4_moment() {
  const auto res = quad::interval(
      [](double x, double xc) {
        if (x < 1e-4) {
          const double g = green_kernel(x);
          return g * g * g * g * x;
        }
        const double one_minus_x = (xc > 0.0) ? xc : 1.0 - x;
        const double g = std::log((1.0 + x) / one_minus_x) / x;
        return g * g * g * g * x;
      },
      0.0, 1.0);
  return res.value;
}

}  // namespace yamabe::geometry
