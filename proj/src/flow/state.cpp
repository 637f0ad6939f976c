#include "yamabe/flow/state.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "yamabe/error.hpp"
#include "yamabe/geometry/reduced.hpp"

namespace yamabe::flow {

namespace {

constexpr double eps_reg = 1e-14;

}  // namespace

FlowState FlowState::make(std::shared_ptr<const RadialGrid> grid, ScalarField v, double t,
                          double volume_target) {
  if (!grid) throw InputError("flow state needs a grid");
  if (v.size() != grid->size())
    throw InputError("flow state: " + std::to_string(v.size()) + " samples for " +
                     std::to_string(grid->size()) + " cells");
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!(v[i] > 0.0) || !std::isfinite(v[i]))
      throw DomainError("flow state: v must be positive and finite (cell " + std::to_string(i) +
                        ")");
  if (!(volume_target > 0.0)) throw InputError("volume target must be positive");
  FlowState s;
  s.sigma_tilde = sigma_of(*grid, v);
  s.grid = std::move(grid);
  s.v = std::move(v);
  s.t = t;
  s.volume_target = volume_target;
  return s;
}

double FlowState::volume() const { return geometry::reduced_volume(*grid, v); }

double sigma_of(const RadialGrid& grid, std::span<const double> v) {
  const double vol = geometry::reduced_volume(grid, v);
  if (!(vol > 0.0)) throw DomainError("sigma_of: zero volume");
  return geometry::energy(grid, v) / vol;
}

double sigma_of(const FlowState& state) { return sigma_of(*state.grid, state.v); }

double normalized_constant(double volume_target) {
  // \int_0^1 c^4 x dx = c^4 / 2
  return std::pow(2.0 * volume_target, 0.25);
}

double stable_dt(const FlowState& state, double safety) {
  if (!(safety > 0.0 && safety < 1.0))
    throw InputError("stable_dt: safety must lie in (0,1), got " + std::to_string(safety));
  const auto& g = *state.grid;
  const auto x = g.midpoints();
  const auto h = g.widths();
  double dt = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double diffusivity = x[i] * (1.0 - x[i]) * (1.0 + x[i]) + eps_reg;
    dt = std::min(dt, 3.0 * state.v[i] * state.v[i] * h[i] * h[i] / diffusivity);
  }
  return safety * dt;
}

FlowState step(const FlowState& state, double dt, StepInfo* info) {
  if (!(dt > 0.0) || !std::isfinite(dt))
    throw DomainError("step: dt must be positive, got " + std::to_string(dt));
  const auto& g = *state.grid;
  if (info) info->above_stability_limit = dt > stable_dt(state, 1.0 - 1e-12);

  const auto flux = geometry::face_fluxes(g, state.v);
  const auto h = g.widths();
  ScalarField next(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double w = state.v[i] * state.v[i] * state.v[i];
    const double w_new = w + dt * (state.sigma_tilde * w + (flux[i + 1] - flux[i]) / h[i]);
    if (!(w_new > 0.0)) throw PositivityLoss(i, w_new);
    next[i] = std::cbrt(w_new);
  }
  return FlowState::make(state.grid, std::move(next), state.t + dt, state.volume_target);
}

FlowState renormalize(const FlowState& state) {
  const double vol = state.volume();
  if (!(vol > 0.0)) throw DomainError("renormalize: zero volume");
  const double scale = std::pow(state.volume_target / vol, 0.25);
  ScalarField v = state.v;
  for (double& vi : v) vi *= scale;
  return FlowState::make(state.grid, std::move(v), state.t, state.volume_target);
}

double boundary_value(const FlowState& state) {
  const auto m = state.grid->centers();
  const std::size_t n = state.grid->size();
  const double x0 = m[n - 2], x1 = m[n - 1];
  const double v0 = state.v[n - 2], v1 = state.v[n - 1];
  return v1 + (v1 - v0) * (1.0 - x1) / (x1 - x0);
}

}  // namespace yamabe::flow
