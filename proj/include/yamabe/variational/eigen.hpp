#pragma once

#include <span>
#include <vector>

#include "yamabe/flow/state.hpp"
#include "yamabe/geometry/sphere.hpp"

namespace yamabe::variational {

using geometry::ScalarField;

struct EigenOptions {
  int max_iterations = 20000;
  double tolerance = 1e-9;
};

struct EigenResult {
  double lambda1 = 0.0;
  ScalarField eigenfunction;  // B-normalized, B-mean zero
  double residual = 0.0;      // ||A phi - lambda B phi||_{B^{-1}} / lambda
  int iterations = 0;
};

// Smallest nonzero eigenvalue of A phi = lambda B phi, with A the path
// Laplacian of `conductance` (entry k couples nodes k-1 and k, entry 0
// unused) and B = diag(mass) > 0. Inverse iteration on the B-orthogonal
// complement of the constants. Throws ConvergenceError when the residual does
// not reach the tolerance (including stagnation at the round-off floor, which
// is near 1e-10 for rough coefficients).
EigenResult first_eigenvalue(std::span<const double> conductance, std::span<const double> mass,
                             const EigenOptions& opts = {});

// Radial first eigenvalue of the Laplacian of g = v^2 g_psi on the
// compactified Eguchi-Hanson space with parameter a (the flow state's metric).
EigenResult first_eigenvalue(const flow::FlowState& state, double a = 1.0,
                             const EigenOptions& opts = {});

// Zonal first eigenvalue of u^{4/(n-2)} g_round on the n-sphere.
EigenResult first_eigenvalue(const geometry::SphereModel& sphere, std::span<const double> u,
                             const EigenOptions& opts = {});

// The generalized pencil (A, B) used for a flow state, exposed for checks.
struct EigenPencil {
  std::vector<double> conductance;
  std::vector<double> mass;
};
EigenPencil eigen_pencil(const flow::FlowState& state, double a = 1.0);
EigenPencil eigen_pencil(const geometry::SphereModel& sphere, std::span<const double> u);

struct EigenCriteria {
  bool uniqueness_criterion = false;         // |lambda1 - sigma/(n-1)| > tol
  bool no_concentration_criterion = false;   // lambda1 > sigma/(n-1) + tol
};

EigenCriteria eigen_criteria(double lambda1, double sigma_inf, int n, double tol = 1e-9);

}  // namespace yamabe::variational
