#include "yamabe/geometry/eguchi_hanson.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "yamabe/error.hpp"
#include "yamabe/geometry/quadrature.hpp"

namespace yamabe::geometry {

using std::numbers::pi;

EguchiHansonModel::EguchiHansonModel(double a) : a_(a) {
  if (!(a > 0.0) || !std::isfinite(a))
    throw DomainError("Eguchi-Hanson parameter a must be positive, got " + std::to_string(a));
}

double EguchiHansonModel::psi(double r) const {
  const double a4 = std::pow(a_, 4);
  return a_ * a_ / std::sqrt(a4 + std::pow(r, 4));
}

RadialFunction EguchiHansonModel::psi_radial() const {
  const double a2 = a_ * a_, a4 = a2 * a2;
  return {
      [=](double s) { return a2 / std::sqrt(a4 + s * s); },
      [=](double s) { return -a2 * s / std::pow(a4 + s * s, 1.5); },
      [=](double s) { return -a2 * (a4 - 2.0 * s * s) / std::pow(a4 + s * s, 2.5); },
  };
}

double EguchiHansonModel::x_of_r(double r) const {
  if (r < 0.0) throw DomainError("x_of_r: r must be nonnegative");
  return psi(r);
}

double EguchiHansonModel::r_of_x(double x) const {
  if (!(x > 0.0) || x > 1.0)
    throw DomainError("r_of_x: x must lie in (0,1], got " + std::to_string(x));
  // r^4 = a^4 (1 - x^2) / x^2
  const double q = (1.0 - x) * (1.0 + x) / (x * x);
  return a_ * std::sqrt(std::sqrt(q));
}

double EguchiHansonModel::scalar_curvature(double r) const {
  return 48.0 / std::sqrt(std::pow(a_, 4) + std::pow(r, 4));
}

double EguchiHansonModel::laplacian_radial(const RadialFunction& f, double r) const {
  if (r == 0.0)
    throw DomainError("laplacian_radial: closed form is singular at r = 0");
  const double r2 = r * r, r4 = r2 * r2, a4 = std::pow(a_, 4);
  const double ratio = a4 / r4;
  return 4.0 * r2 / std::sqrt(r4 + a4) *
         ((2.0 + ratio) * f.d1(r2) + (1.0 + ratio) * r2 * f.d2(r2));
}

double EguchiHansonModel::volume() const { return pi * pi * std::pow(a_, 4) / 4.0; }

double EguchiHansonModel::volume_by_quadrature() const {
  const auto res = quad::half_line([this](double r) {
    const double p = psi(r);
    return p * p * p * p * r * r * r;
  });
  return pi * pi * res.value;
}

double EguchiHansonModel::distance_to_infinity() const {
  const auto res = quad::half_line([](double t) { return std::pow(1.0 + t * t, -0.75); });
  return 0.5 * a_ * res.value;
}

double EguchiHansonModel::scalar_l2_energy() const {
  const auto res = quad::half_line([this](double r) {
    const double s = scalar_curvature(r);
    const double p = psi(r);
    return s * s * p * p * p * p * r * r * r;
  });
  return pi * pi * res.value;
}

double EguchiHansonModel::distance_from_singular_point(double x) const {
  if (x < 0.0 || x > 1.0)
    throw DomainError("distance_from_singular_point: x must lie in [0,1]");
  if (x == 0.0) return 0.0;
  const double b = std::sqrt(x);
  // u = b t keeps the interval at unit length for cells close to x = 0
  const auto res = quad::interval(
      [b](double t, double tc) {
        // 1 - u^4 = (1-u)(1+u)(1+u^2), with 1-u taken from the complement near t = 1
        const double u = b * t;
        const double one_minus_u = (tc > 0.0) ? (1.0 - b) + b * tc : 1.0 - u;
        return 1.0 / std::sqrt(one_minus_u * (1.0 + u) * (1.0 + u * u));
      },
      0.0, 1.0);
  return a_ * b * res.value;
}

double EguchiHansonModel::volume_factor() const { return 0.5 * pi * pi * std::pow(a_, 4); }

double EguchiHansonModel::curvature_factor() const { return 24.0 / (a_ * a_); }

std::vector<double> ahlfors_ratios_at_singular_point(const EguchiHansonModel& model,
                                                     const RadialGrid& grid,
                                                     std::span<const double> radii) {
  const double d_max = model.distance_from_singular_point(1.0);
  const auto faces = grid.faces();
  const auto weights = grid.weights();
  std::vector<double> out;
  out.reserve(radii.size());
  for (double rho : radii) {
    if (!(rho > 0.0)) throw DomainError("Ahlfors radius must be positive");
    double x_edge = 1.0;
    if (rho < d_max) {
      double lo = 0.0, hi = 1.0;
      for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
        const double mid = 0.5 * (lo + hi);
        (model.distance_from_singular_point(mid) < rho ? lo : hi) = mid;
      }
      x_edge = 0.5 * (lo + hi);
    }
    const std::size_t k = grid.locate(x_edge);
    double reduced = 0.0;
    for (std::size_t i = 0; i < k; ++i) reduced += weights[i];
    reduced += 0.5 * (x_edge * x_edge - faces[k] * faces[k]);
    out.push_back(model.volume_factor() * reduced / std::pow(rho, 4));
  }
  return out;
}

}  // namespace yamabe::geometry
