#pragma once

#include <memory>
#include <span>
#include <vector>

#include "yamabe/geometry/grid.hpp"

namespace yamabe::flow {

using geometry::RadialGrid;
using geometry::ScalarField;

inline constexpr double default_volume_target = 2.0;

// Snapshot of the reduced normalized Yamabe flow
//
//   d/dt v^3 - sigma~ v^3 = d/dx((1 - x^2) d/dx(x v)),
//
// with sigma~ the discrete energy / volume quotient of v.
struct FlowState {
  std::shared_ptr<const RadialGrid> grid;
  ScalarField v;
  double t = 0.0;
  double sigma_tilde = 0.0;
  double volume_target = default_volume_target;

  // Validates positivity and computes sigma~ from v.
  static FlowState make(std::shared_ptr<const RadialGrid> grid, ScalarField v, double t = 0.0,
                        double volume_target = default_volume_target);

  double volume() const;
};

// E(v) / Vol(v); throws DomainError on zero volume.
double sigma_of(const RadialGrid& grid, std::span<const double> v);
double sigma_of(const FlowState& state);

// Constant conformal factor with reduced volume `volume_target`.
double normalized_constant(double volume_target);

// Explicit step bound: safety * min_i 3 v_i^2 h_i^2 / (x_i (1 - x_i^2) + 1e-14).
double stable_dt(const FlowState& state, double safety);

struct StepInfo {
  bool above_stability_limit = false;
};

// Forward Euler on w = v^3. Throws PositivityLoss if any w <= 0 after the
// update; never clamps.
FlowState step(const FlowState& state, double dt, StepInfo* info = nullptr);

// Rescales v so that the reduced volume equals the target.
FlowState renormalize(const FlowState& state);

// v linearly extrapolated from the last two cells to x = 1.
double boundary_value(const FlowState& state);

}  // namespace yamabe::flow
