#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "yamabe/flow/run.hpp"
#include "yamabe/geometry/eguchi_hanson.hpp"

namespace yamabe::diagnostics {

// Standard bubble in dimension 4 centred at the orbifold point:
//   B(d) = c * le / (le^2 + d^2),  le = lambda * epsilon.
struct BubbleFit {
  double scale_eps_lambda = 0.0;
  double c_fit = 0.0;
  double residual = 0.0;  // relative RMS of v against the fitted profile
  std::size_t window_begin = 0;
  std::size_t window_end = 0;  // one past the last cell
  double slope = 0.0;
  double intercept = 0.0;
};

enum class DistanceMode {
  background,  // fixed g_psi distance
  evolving,    // distance of v^2 g_psi, cumulated with the trapezoidal rule
};

// Distance from the orbifold point (x = 0) to every cell center.
std::vector<double> distances_to_singular_point(const flow::FlowState& state,
                                                const geometry::EguchiHansonModel& model,
                                                DistanceMode mode = DistanceMode::background);

// Least-squares fit of 1/v against d^2 over the contiguous block of cells
// around the maximum where v > max(v) / 2. Throws DomainError for fewer than
// 8 cells in the window or a non-positive slope or intercept.
BubbleFit bubble_fit(const flow::FlowState& state, const geometry::EguchiHansonModel& model,
                     DistanceMode mode = DistanceMode::background);

// Decay rate mu of F2 ~ exp(-mu t), fitted by least squares on log F2 over
// the trailing half of the series (at least 10 records). Returns +infinity if
// F2 vanishes in that window.
double decay_rate_fit(std::span<const flow::TimeSeriesRecord> series);

}  // namespace yamabe::diagnostics
