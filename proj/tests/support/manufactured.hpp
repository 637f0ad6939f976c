#pragma once

// Discrete states with constant reduced curvature, built by marching the
// face fluxes outward from x = 0 and shooting on v_0.

#include <cmath>
#include <memory>
#include <stdexcept>
#include <vector>

#include "yamabe/flow/state.hpp"

namespace testing_support {

struct MarchResult {
  std::vector<double> v;
  bool overshoot = false;  // a flux turned negative before the last cell
  double last_flux = 0.0;  // F_n implied by the march, zero for a solution
};

// S~_i = sigma in every cell given v_0: F_0 = v_0 and F_{i+1} = F_i - sigma h_i v_i^3.
inline MarchResult march(const yamabe::geometry::RadialGrid& g, double v0, double sigma) {
  const auto faces = g.faces();
  const auto m = g.midpoints();
  const auto h = g.widths();
  const std::size_t n = g.size();
  MarchResult r;
  r.v.resize(n);
  r.v[0] = v0;
  double flux = v0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    flux -= sigma * h[i] * r.v[i] * r.v[i] * r.v[i];
    if (flux < 0.0) {
      r.overshoot = true;
      return r;
    }
    const double x = faces[i + 1];
    r.v[i + 1] = (m[i] * r.v[i] + flux * (m[i + 1] - m[i]) / ((1.0 - x) * (1.0 + x))) / m[i + 1];
  }
  r.last_flux = flux - sigma * h[n - 1] * std::pow(r.v[n - 1], 3);
  r.overshoot = r.last_flux < 0.0;
  return r;
}

// Positive v with S~ == sigma on every cell (up to round-off).
inline std::vector<double> constant_curvature_profile(const yamabe::geometry::RadialGrid& g,
                                                      double sigma = 1.0) {
  double lo = 1e-6, hi = 1.0;
  while (!march(g, hi, sigma).overshoot) hi *= 2.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (march(g, mid, sigma).overshoot)
      hi = mid;
    else
      lo = mid;
    if (hi - lo <= 1e-16 * hi) break;
  }
  return march(g, lo, sigma).v;
}

inline yamabe::flow::FlowState constant_curvature_state(
    std::shared_ptr<const yamabe::geometry::RadialGrid> g, double volume_target = 2.0) {
  auto v = constant_curvature_profile(*g);
  return yamabe::flow::renormalize(yamabe::flow::FlowState::make(g, std::move(v), 0.0, volume_target));
}

}  // namespace testing_support
