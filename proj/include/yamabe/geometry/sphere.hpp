#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace yamabe::geometry {

// Vol(S^n) = 2 pi^{(n+1)/2} / Gamma((n+1)/2)
double sphere_volume(int n);

// Round n-sphere reduced to zonal functions of the polar angle theta.
// Cells are uniform in theta on [0, pi]; each carries the exact measure
// omega_{n-1} \int sin^{n-1}(theta) dtheta of the cell.
class SphereModel {
 public:
  SphereModel(int n, std::size_t n_cells);

  int dimension() const noexcept { return n_; }
  std::size_t size() const noexcept { return nodes_.size(); }

  std::span<const double> faces() const noexcept { return faces_; }
  std::span<const double> nodes() const noexcept { return nodes_; }
  std::span<const double> weights() const noexcept { return weights_; }

  // omega_{n-1} sin^{n-1}(theta_face) / (node spacing) for interior faces
  // k = 1..size()-1; the polar faces carry no flux. Entry 0 is unused (0).
  std::span<const double> conductances() const noexcept { return conductances_; }

  double total_measure() const;

  // Scalar curvature n(n-1) of the round metric.
  double scalar_curvature() const noexcept { return n_ * (n_ - 1.0); }

 private:
  int n_;
  std::vector<double> faces_;
  std::vector<double> nodes_;
  std::vector<double> weights_;
  std::vector<double> conductances_;
};

}  // namespace yamabe::geometry
