#include "yamabe/geometry/sphere.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "yamabe/error.hpp"

namespace yamabe::geometry {

double sphere_volume(int n) {
  const double k = 0.5 * (n + 1);
  return 2.0 * std::pow(std::numbers::pi, k) / std::tgamma(k);
}

SphereModel::SphereModel(int n, std::size_t n_cells) : n_(n) {
  if (n < 3) throw InputError("sphere dimension must be >= 3, got " + std::to_string(n));
  if (n_cells < 8) throw InputError("sphere grid needs at least 8 cells");

  const double omega = sphere_volume(n - 1);
  const double h = std::numbers::pi / static_cast<double>(n_cells);
  faces_.resize(n_cells + 1);
  nodes_.resize(n_cells);
  weights_.resize(n_cells);
  conductances_.assign(n_cells, 0.0);

  for (std::size_t i = 0; i <= n_cells; ++i) faces_[i] = h * static_cast<double>(i);
  faces_.back() = std::numbers::pi;

  auto density = [n](double t) { return std::pow(std::sin(t), n - 1); };
  using gauss = boost::math::quadrature::gauss<double, 20>;
  for (std::size_t i = 0; i < n_cells; ++i) {
    nodes_[i] = 0.5 * (faces_[i] + faces_[i + 1]);
    weights_[i] = omega * gauss::integrate(density, faces_[i], faces_[i + 1]);
  }
  for (std::size_t k = 1; k < n_cells; ++k)
    conductances_[k] = omega * density(faces_[k]) / (nodes_[k] - nodes_[k - 1]);
}

double SphereModel::total_measure() const {
  return std::accumulate(weights_.begin(), weights_.end(), 0.0);
}

}  // namespace yamabe::geometry
