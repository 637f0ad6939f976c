#pragma once

#include <functional>
#include <string>
#include <vector>

#include "yamabe/geometry/eguchi_hanson.hpp"
#include "yamabe/geometry/grid.hpp"
#include "yamabe/geometry/sphere.hpp"
#include "yamabe/variational/tridiagonal.hpp"

namespace yamabe::variational {

using geometry::ScalarField;

// Yamabe quotient of v^{4/(n-2)} g_psi on the compactified Eguchi-Hanson
// space, v radial and given in s = r^2. If `v.d1` is empty the s-derivative
// is taken by centered differences.
double yamabe_quotient_eh(const geometry::RadialFunction& v, double a);

// Yamabe quotient on the round n-sphere of a zonal function v(theta) with
// derivative dv(theta).
double yamabe_quotient_sphere(const std::function<double(double)>& v,
                              const std::function<double(double)>& dv, int n);

// Discrete quotient Q(v) = alpha * v^T T v / (sum_i w_i |v_i|^p)^{2/p}.
struct DiscreteQuotient {
  SymTridiag T;
  std::vector<double> w;
  double p = 4.0;
  double alpha = 1.0;

  std::size_t size() const noexcept { return w.size(); }
  double value(std::span<const double> v) const;
  // (sum w |v|^p)^{1/p}
  double lp_norm(std::span<const double> v) const;
};

// 12 sqrt(2) pi E_h(v) / sqrt(V_h(v)) on a RadialGrid: the flow's own energy
// and volume, so the quotient of a flow state is its unit-volume sigma.
DiscreteQuotient eh_discrete_quotient(const geometry::RadialGrid& grid);

// c_n * stiffness + n(n-1) * mass on the polar grid, exponent 2n/(n-2).
DiscreteQuotient sphere_discrete_quotient(const geometry::SphereModel& sphere);

enum class QuotientModel { eguchi_hanson, sphere };

const char* to_string(QuotientModel m);
QuotientModel quotient_model_from_string(const std::string& s);

struct MinimizeOptions {
  int max_iterations = 2000;
  // The quotient changes by ~tolerance^2 per step, so values much below 1e-7
  // are under round-off.
  double tolerance = 1e-6;
  int max_halvings = 60;
};

struct QuotientResult {
  double value = 0.0;
  ScalarField minimizer;  // unit L^p norm
  int iterations = 0;
  double gradient_norm = 0.0;
  double initial_value = 0.0;
  double initial_gradient_norm = 0.0;
  bool converged = false;
  std::vector<double> history;  // value after each accepted iterate, starting with the initial one
};

// Sobolev-preconditioned projected descent. The search direction is
//   g = v - (N / D) T^{-1} (w |v|^{p-2} v),   N = v^T T v, D = sum w |v|^p,
// the step is halved from 1 until the quotient does not increase, and every
// iterate is rescaled to unit L^p norm. Stops when sqrt(g^T T g / N) falls
// below the tolerance; otherwise returns the last iterate with
// converged = false.
QuotientResult minimize_quotient(const DiscreteQuotient& q, ScalarField init,
                                 const MinimizeOptions& opts = {});

}  // namespace yamabe::variational
