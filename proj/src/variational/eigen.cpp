#include "yamabe/variational/eigen.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include "yamabe/error.hpp"
#include "yamabe/variational/tridiagonal.hpp"

namespace yamabe::variational {

namespace {

double b_dot(std::span<const double> mass, std::span<const double> x, std::span<const double> y) {
  double s = 0.0;
  for (std::size_t i = 0; i < mass.size(); ++i) s += mass[i] * x[i] * y[i];
  return s;
}

// Removes the B-weighted mean and scales to unit B-norm.
void b_project(std::span<const double> mass, double total_mass, std::vector<double>& x) {
  double mean = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) mean += mass[i] * x[i];
  mean /= total_mass;
  for (double& xi : x) xi -= mean;
  const double nrm = std::sqrt(b_dot(mass, x, x));
  if (!(nrm > 0.0)) throw ConvergenceError("first_eigenvalue: iterate collapsed to a constant");
  for (double& xi : x) xi /= nrm;
}

std::string format_g(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

}  // namespace

EigenResult first_eigenvalue(std::span<const double> conductance, std::span<const double> mass,
                             const EigenOptions& opts) {
  const std::size_t n = mass.size();
  if (conductance.size() != n || n < 2)
    throw InputError("first_eigenvalue: conductance and mass must have equal length >= 2");
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(mass[i] > 0.0)) throw DomainError("first_eigenvalue: mass must be positive");
    total += mass[i];
  }
  for (std::size_t k = 1; k < n; ++k)
    if (!(conductance[k] > 0.0)) throw DomainError("first_eigenvalue: conductance must be positive");

  const SymTridiag a = path_laplacian(conductance);

  // Start from a monotone profile, which overlaps the lowest mode.
  std::vector<double> phi(n);
  for (std::size_t i = 0; i < n; ++i) phi[i] = static_cast<double>(i) / static_cast<double>(n - 1);
  b_project(mass, total, phi);

  EigenResult res;
  std::vector<double> rhs(n);
  double best = std::numeric_limits<double>::infinity();
  int best_it = 0;
  constexpr int stagnation_window = 200;
  for (int it = 1; it <= opts.max_iterations; ++it) {
    for (std::size_t i = 0; i < n; ++i) rhs[i] = mass[i] * phi[i];
    phi = solve_path_laplacian(conductance, rhs);
    b_project(mass, total, phi);

    const auto aphi = a.apply(phi);
    const double lambda = a.quadratic(phi);  // B-norm is 1
    double r2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double r = aphi[i] - lambda * mass[i] * phi[i];
      r2 += r * r / mass[i];
    }
    res.lambda1 = lambda;
    res.residual = std::sqrt(r2) / lambda;
    res.iterations = it;
    if (res.residual <= opts.tolerance) {
      res.eigenfunction = std::move(phi);
      return res;
    }
    if (res.residual < 0.5 * best) {
      best = res.residual;
      best_it = it;
    } else if (it - best_it > stagnation_window) {
      throw ConvergenceError("first_eigenvalue: residual stagnated at " + format_g(res.residual) +
                             " above tolerance " + format_g(opts.tolerance));
    }
  }
  throw ConvergenceError("first_eigenvalue: residual " + format_g(res.residual) +
                         " above tolerance after " + std::to_string(opts.max_iterations) +
                         " iterations");
}

EigenPencil eigen_pencil(const flow::FlowState& state, double a) {
  if (!(a > 0.0)) throw InputError("eigen_pencil: a must be positive");
  const auto& g = *state.grid;
  const std::size_t n = g.size();
  const auto faces = g.faces();
  const auto m = g.midpoints();
  const auto w = g.weights();
  EigenPencil p{std::vector<double>(n, 0.0), std::vector<double>(n)};
  // Dirichlet form (4/a^2) \int v^2 x^2 (1 - x^2) phi'^2 dx against \int phi^2 v^4 x dx.
  for (std::size_t k = 1; k < n; ++k) {
    const double x = faces[k];
    const double vf = 0.5 * (state.v[k - 1] + state.v[k]);
    p.conductance[k] = 4.0 / (a * a) * vf * vf * x * x * (1.0 - x) * (1.0 + x) / (m[k] - m[k - 1]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    const double v2 = state.v[i] * state.v[i];
    p.mass[i] = w[i] * v2 * v2;
  }
  return p;
}

EigenPencil eigen_pencil(const geometry::SphereModel& sphere, std::span<const double> u) {
  const std::size_t n = sphere.size();
  if (u.size() != n) throw InputError("eigen_pencil: field length does not match grid");
  const int dim = sphere.dimension();
  const auto c = sphere.conductances();
  const auto w = sphere.weights();
  EigenPencil p{std::vector<double>(n, 0.0), std::vector<double>(n)};
  for (std::size_t k = 1; k < n; ++k) {
    const double uf = 0.5 * (u[k - 1] + u[k]);
    p.conductance[k] = c[k] * uf * uf;
  }
  const double q = 2.0 * dim / (dim - 2.0);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(u[i] > 0.0)) throw DomainError("eigen_pencil: u must be positive");
    p.mass[i] = w[i] * std::pow(u[i], q);
  }
  return p;
}

EigenResult first_eigenvalue(const flow::FlowState& state, double a, const EigenOptions& opts) {
  const auto p = eigen_pencil(state, a);
  return first_eigenvalue(p.conductance, p.mass, opts);
}

EigenResult first_eigenvalue(const geometry::SphereModel& sphere, std::span<const double> u,
                             const EigenOptions& opts) {
  const auto p = eigen_pencil(sphere, u);
  return first_eigenvalue(p.conductance, p.mass, opts);
}

EigenCriteria eigen_criteria(double lambda1, double sigma_inf, int n, double tol) {
  if (!std::isfinite(lambda1) || !std::isfinite(sigma_inf) || n < 3 || !(tol >= 0.0))
    throw InputError("eigen_criteria: finite inputs and n >= 3 required");
  const double critical = sigma_inf / (n - 1.0);
  return {std::abs(lambda1 - critical) > tol, lambda1 > critical + tol};
}

}  // namespace yamabe::variational
