#include "yamabe/geometry/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "yamabe/error.hpp"

namespace yamabe::geometry {

const char* to_string(Grading g) {
  return g == Grading::uniform ? "uniform" : "geometric";
}

Grading grading_from_string(const std::string& s) {
  if (s == "uniform") return Grading::uniform;
  if (s == "geometric") return Grading::geometric;
  throw InputError("unknown grid grading '" + s + "'");
}

RadialGrid RadialGrid::build(std::size_t n_cells, Grading grading, double ratio) {
  if (n_cells < min_cells)
    throw InputError("grid needs at least " + std::to_string(min_cells) + " cells, got " +
                     std::to_string(n_cells));

  std::vector<double> faces(n_cells + 1);
  if (grading == Grading::uniform) {
    for (std::size_t i = 0; i <= n_cells; ++i)
      faces[i] = static_cast<double>(i) / static_cast<double>(n_cells);
  } else {
    if (!(ratio > 0.0 && ratio < 1.0))
      throw InputError("geometric ratio must lie in (0,1), got " + std::to_string(ratio));
    // widths h_i = h_0 q^i with q = 1/ratio, growing away from x = 0
    const double q = 1.0 / ratio;
    std::vector<double> w(n_cells);
    double total = 0.0;
    for (std::size_t i = 0; i < n_cells; ++i) {
      w[i] = std::pow(q, static_cast<double>(i) - static_cast<double>(n_cells - 1));
      total += w[i];
    }
    faces[0] = 0.0;
    double acc = 0.0;
    for (std::size_t i = 0; i < n_cells; ++i) {
      acc += w[i];
      faces[i + 1] = acc / total;
    }
  }
  faces.front() = 0.0;
  faces.back() = 1.0;
  return RadialGrid(std::move(faces), grading, ratio);
}

RadialGrid::RadialGrid(std::vector<double> faces, Grading g, double ratio)
    : grading_(g), ratio_(ratio), faces_(std::move(faces)) {
  const std::size_t n = faces_.size() - 1;
  centers_.resize(n);
  midpoints_.resize(n);
  widths_.resize(n);
  weights_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double a = faces_[i], b = faces_[i + 1];
    widths_[i] = b - a;
    midpoints_[i] = 0.5 * (a + b);
    weights_[i] = 0.5 * (b - a) * (b + a);
    centers_[i] = (2.0 / 3.0) * (a * a + a * b + b * b) / (a + b);
  }
}

double RadialGrid::face_spacing(std::size_t k) const {
  if (k == 0) return midpoints_[0];
  if (k >= size()) return 1.0 - midpoints_.back();
  return midpoints_[k] - midpoints_[k - 1];
}

double RadialGrid::max_width() const {
  return *std::max_element(widths_.begin(), widths_.end());
}

double RadialGrid::integrate(std::span<const double> f) const {
  double s = 0.0;
  for (std::size_t i = 0; i < size(); ++i) s += weights_[i] * f[i];
  return s;
}

std::size_t RadialGrid::locate(double x) const {
  if (x <= 0.0) return 0;
  if (x >= 1.0) return size() - 1;
  auto it = std::upper_bound(faces_.begin(), faces_.end(), x);
  return static_cast<std::size_t>(std::distance(faces_.begin(), it)) - 1;
}

}  // namespace yamabe::geometry
