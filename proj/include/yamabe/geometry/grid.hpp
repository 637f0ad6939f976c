#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace yamabe::geometry {

using ScalarField = std::vector<double>;

enum class Grading { uniform, geometric };

const char* to_string(Grading g);
Grading grading_from_string(const std::string& s);

// Cell-centered finite-volume grid on [0,1] for the scale-less coordinate
// x = psi(r), with quadrature against the measure x dx.
//
// Every cell [a,b] carries
//   width    b - a
//   midpoint (a + b) / 2          -- node used by the flux differences
//   center   centroid of x dx     -- quadrature node, (2/3)(a^2+ab+b^2)/(a+b)
//   weight   (b^2 - a^2) / 2      -- exact x dx measure of the cell
//
// The weights sum to 1/2 up to round-off and the rule (weight, center) is
// exact for f(x) = 1 and f(x) = x.
class RadialGrid {
 public:
  static constexpr std::size_t min_cells = 8;
  static constexpr double default_ratio = 0.97;

  // Geometric grading shrinks cell widths by `ratio` per cell towards x = 0,
  // where the bubble forms.
  static RadialGrid build(std::size_t n_cells, Grading grading = Grading::uniform,
                          double ratio = default_ratio);

  std::size_t size() const noexcept { return centers_.size(); }
  Grading grading() const noexcept { return grading_; }
  double ratio() const noexcept { return ratio_; }

  std::span<const double> faces() const noexcept { return faces_; }
  std::span<const double> centers() const noexcept { return centers_; }
  std::span<const double> midpoints() const noexcept { return midpoints_; }
  std::span<const double> widths() const noexcept { return widths_; }
  std::span<const double> weights() const noexcept { return weights_; }

  // Distance between the flux nodes adjacent to face k; face 0 sits at x = 0
  // and uses the ghost node there, face n at x = 1 carries no flux.
  double face_spacing(std::size_t k) const;

  // Largest cell width.
  double max_width() const;

  // sum_i weight_i * f_i
  double integrate(std::span<const double> f) const;

  template <class F>
  double integrate_function(F&& f) const {
    double s = 0.0;
    for (std::size_t i = 0; i < size(); ++i) s += weights_[i] * f(centers_[i]);
    return s;
  }

  // Index of the cell containing x (x in [0,1]).
  std::size_t locate(double x) const;

 private:
  RadialGrid(std::vector<double> faces, Grading g, double ratio);

  Grading grading_;
  double ratio_;
  std::vector<double> faces_;
  std::vector<double> centers_;
  std::vector<double> midpoints_;
  std::vector<double> widths_;
  std::vector<double> weights_;
};

}  // namespace yamabe::geometry
