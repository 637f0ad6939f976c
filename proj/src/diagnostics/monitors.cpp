#include "yamabe/diagnostics/monitors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "yamabe/error.hpp"
#include "yamabe/geometry/reduced.hpp"

namespace yamabe::diagnostics {

using std::numbers::pi;

double f_p(const geometry::RadialGrid& grid, std::span<const double> v,
           std::span<const double> curvature, double sigma, double p) {
  if (!(p >= 1.0)) throw InputError("f_p: exponent must be >= 1");
  const auto w = grid.weights();
  double acc = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double v2 = v[i] * v[i];
    acc += w[i] * std::pow(std::abs(curvature[i] - sigma), p) * v2 * v2;
  }
  return acc;
}

double f_p(const FlowState& state, double p) {
  const auto s = geometry::scalar_from_v(*state.grid, state.v);
  return f_p(*state.grid, state.v, s, state.sigma_tilde, p);
}

double mass_fraction(const FlowState& state, double x0) {
  if (!(x0 > 0.0 && x0 <= 1.0)) throw InputError("mass_fraction: cutoff must lie in (0,1]");
  const auto& g = *state.grid;
  const auto faces = g.faces();
  const auto w = g.weights();
  const std::size_t k = g.locate(x0);
  double inner = 0.0;
  for (std::size_t i = 0; i < k; ++i) inner += w[i] * std::pow(state.v[i], 4);
  inner += 0.5 * (x0 - faces[k]) * (x0 + faces[k]) * std::pow(state.v[k], 4);
  return std::min(1.0, inner / state.volume());
}

std::vector<double> concentration_monitor(const FlowState& state, std::span<const double> cutoffs) {
  std::vector<double> out;
  out.reserve(cutoffs.size());
  for (double x0 : cutoffs) out.push_back(mass_fraction(state, x0));
  return out;
}

double point_mass_threshold(double sigma_inf, double y_local, int n) {
  if (!(sigma_inf > 0.0)) throw InputError("point_mass_threshold: sigma_inf must be positive");
  return std::pow(y_local / sigma_inf, 0.5 * n);
}

ConcentrationFlag detect_concentration(const FlowState& state, double base_cutoff,
                                       double threshold) {
  ConcentrationFlag flag;
  flag.base_cutoff = base_cutoff;
  flag.detected = true;
  double x0 = base_cutoff;
  for (int level = 0; level < 3; ++level, x0 *= 0.5) {
    const double frac = mass_fraction(state, x0);
    flag.cutoffs.push_back(x0);
    flag.fractions.push_back(frac);
    if (!(frac > threshold)) flag.detected = false;
  }
  return flag;
}

double green_identity_residual(const FlowState& state) {
  const auto& g = *state.grid;
  const auto s = geometry::scalar_from_v(g, state.v);
  const auto gw = geometry::green_cell_weights(g);
  double rhs = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i)
    rhs += gw[i] * s[i] * state.v[i] * state.v[i] * state.v[i];
  const double lhs = 2.0 * flow::boundary_value(state);
  return std::abs(lhs - rhs) / std::max(1.0, lhs);
}

double curvature_l2(const FlowState& state) {
  const auto s = geometry::scalar_from_v(*state.grid, state.v);
  return f_p(*state.grid, state.v, s, 0.0, 2.0);
}

SupBound sup_bound_check(const FlowState& state, double lambda) {
  if (!(lambda >= 0.0)) throw InputError("sup_bound_check: Lambda must be nonnegative");
  const auto& g = *state.grid;
  SupBound out;
  out.C = std::pow(geometry::green_l4_moment(), 0.25) * std::sqrt(lambda) *
          std::pow(state.volume_target, 0.25) / 2.0;
  const auto x = g.centers();
  for (std::size_t i = 0; i < g.size(); ++i)
    out.max_bound_violation = std::max(out.max_bound_violation, x[i] * state.v[i] - out.C);
  for (double jump : geometry::xv_jumps(g, state.v))
    out.max_monotonicity_violation = std::max(out.max_monotonicity_violation, -jump);
  return out;
}

double unit_volume_sigma(const FlowState& state) {
  return 12.0 * std::numbers::sqrt2 * pi * state.sigma_tilde * std::sqrt(state.volume());
}

double positive_curvature_norm(const FlowState& state) {
  const auto s = geometry::scalar_from_v(*state.grid, state.v);
  const auto w = state.grid->weights();
  double acc = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double sp = std::max(0.0, s[i]);
    acc += w[i] * sp * sp * std::pow(state.v[i], 4);
  }
  return std::sqrt(288.0 * pi * pi * acc);
}

bool small_energy_test(double s0_plus_norm, double y_local) {
  if (s0_plus_norm < 0.0 || y_local < 0.0)
    throw InputError("small_energy_test: inputs must be nonnegative");
  return s0_plus_norm < y_local;
}

bool low_average_test(double sigma0, double y, double y_local, int n) {
  if (sigma0 < 0.0 || y < 0.0 || y_local < 0.0)
    throw InputError("low_average_test: inputs must be nonnegative");
  const double e = 0.5 * n;
  return std::pow(sigma0, e) <= std::pow(y, e) + std::pow(y_local, e);
}

int max_bubble_count(double sigma_inf, double y_local, int n) {
  if (!(y_local > 0.0)) throw InputError("max_bubble_count: Y_local must be positive");
  if (sigma_inf <= 0.0) return 0;
  const double bound = std::pow(sigma_inf / y_local, 0.5 * n);
  // absorb round-off in the power so exact integer bounds are not lost
  return static_cast<int>(std::floor(bound * (1.0 + 1e-12)));
}

}  // namespace yamabe::diagnostics
