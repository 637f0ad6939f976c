#pragma once

#include <span>
#include <vector>

#include "yamabe/flow/state.hpp"
#include "yamabe/geometry/eguchi_hanson.hpp"

namespace yamabe::diagnostics {

using flow::FlowState;

// F_p = \int |S~ - sigma~|^p v^4 x dx
double f_p(const FlowState& state, double p);
// Same with explicitly supplied curvature samples.
double f_p(const geometry::RadialGrid& grid, std::span<const double> v,
           std::span<const double> curvature, double sigma, double p);

// \int_0^{x0} v^4 x dx / \int_0^1 v^4 x dx with v piecewise constant per cell.
double mass_fraction(const FlowState& state, double x0);

// One fraction per cutoff.
std::vector<double> concentration_monitor(const FlowState& state, std::span<const double> cutoffs);

// Smallest volume fraction a point mass can carry in the limit,
// (Y_local / sigma_inf)^{n/2}, with sigma_inf in unit-volume normalization.
double point_mass_threshold(double sigma_inf, double y_local, int n);

struct ConcentrationFlag {
  bool detected = false;
  double base_cutoff = 0.0;
  std::vector<double> cutoffs;    // base, base/2, base/4
  std::vector<double> fractions;  // mass fraction at each cutoff
};

// Flags a point mass at x = 0 when the fraction in [0, x0] stays above
// `threshold` through two successive halvings of x0.
ConcentrationFlag detect_concentration(const FlowState& state, double base_cutoff,
                                       double threshold);

// |2 v(1) - \int G S~ v^3 x dx| / max(1, 2 v(1)), with v(1) extrapolated and the
// integral taken with exact cell integrals of G x.
double green_identity_residual(const FlowState& state);

// Lambda = \int S~^2 v^4 x dx
double curvature_l2(const FlowState& state);

struct SupBound {
  double C = 0.0;                     // bound on x v
  double max_bound_violation = 0.0;   // max_i (x_i v_i - C)_+
  double max_monotonicity_violation = 0.0;  // max_k (-delta(xv)_k)_+
};

SupBound sup_bound_check(const FlowState& state, double lambda);

// sigma in the unit-volume normalization of the real metric; equals the
// Yamabe quotient of the state, 12 sqrt(2) pi sigma~ sqrt(Vol).
double unit_volume_sigma(const FlowState& state);

// ||S_+||_{L^2} of the real metric: sqrt(288 pi^2 \int (S~_+)^2 v^4 x dx). Scale invariant.
double positive_curvature_norm(const FlowState& state);

bool small_energy_test(double s0_plus_norm, double y_local);
bool low_average_test(double sigma0, double y, double y_local, int n);
int max_bubble_count(double sigma_inf, double y_local, int n);

}  // namespace yamabe::diagnostics
