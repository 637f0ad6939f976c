#pragma once

#include <functional>
#include <span>
#include <vector>

#include "yamabe/geometry/grid.hpp"

namespace yamabe::geometry {

// Radial function expressed in the variable s = r^2, with its first two
// s-derivatives.
struct RadialFunction {
  std::function<double(double)> value;
  std::function<double(double)> d1;
  std::function<double(double)> d2;
};

// Conformal compactification of the Eguchi-Hanson space with the conformal
// factor psi^2 = a^4 / (a^4 + r^4). Dimension is fixed to 4 and the orbifold
// group at infinity is {+1, -1}.
class EguchiHansonModel {
 public:
  static constexpr int dimension = 4;
  static constexpr int group_order = 2;

  explicit EguchiHansonModel(double a = 1.0);

  double a() const noexcept { return a_; }

  double psi(double r) const;
  // psi as a function of s = r^2
  RadialFunction psi_radial() const;

  // x = a^2 / sqrt(a^4 + r^4), the scale-less coordinate in (0,1].
  double x_of_r(double r) const;
  // Inverse of x_of_r; x = 0 (the orbifold point) has no finite preimage.
  double r_of_x(double x) const;

  // S_psi = 48 / sqrt(a^4 + r^4)
  double scalar_curvature(double r) const;

  // Laplacian of the (Ricci-flat, Kaehler) Eguchi-Hanson metric on radial
  // functions. Throws DomainError at r = 0, where the closed form has no
  // limit rule.
  double laplacian_radial(const RadialFunction& f, double r) const;

  // pi^2 a^4 / 4
  double volume() const;
  // Quadrature of pi^2 \int_0^inf psi^4 r^3 dr
  double volume_by_quadrature() const;

  // Length of the radial geodesic from the zero section to the orbifold
  // point, (a/2) \int_0^inf (1 + t^2)^{-3/4} dt.
  double distance_to_infinity() const;

  // ||S_psi||^2_{L^2(g_psi)} = pi^2 \int_0^inf S_psi^2 psi^4 r^3 dr
  double scalar_l2_energy() const;

  // Background g_psi distance from the orbifold point (x = 0) to the sphere
  // of coordinate x: a \int_0^{sqrt x} du / sqrt(1 - u^4).
  double distance_from_singular_point(double x) const;

  // Real volume of g = v^2 g_psi relative to the reduced volume: dVol = (pi^2 a^4 / 2) x dx.
  double volume_factor() const;

  // Ratio S / S~ between the scalar curvature of v^2 g_psi and the reduced
  // curvature S~ of the normalized PDE, 24 / a^2.
  double curvature_factor() const;

 private:
  double a_;
};

// Ahlfors ratio mu(B(p, rho)) / rho^4 for balls around the orbifold point,
// mu the discrete g_psi volume measure on `grid` (partial cells included).
std::vector<double> ahlfors_ratios_at_singular_point(const EguchiHansonModel& model,
                                                     const RadialGrid& grid,
                                                     std::span<const double> radii);

}  // namespace yamabe::geometry
