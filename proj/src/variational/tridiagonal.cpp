#include "yamabe/variational/tridiagonal.hpp"

#include <cmath>

#include "yamabe/error.hpp"

namespace yamabe::variational {

std::vector<double> SymTridiag::apply(std::span<const double> x) const {
  const std::size_t n = size();
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    double s = diag[i] * x[i];
    if (i > 0) s += off[i - 1] * x[i - 1];
    if (i + 1 < n) s += off[i] * x[i + 1];
    y[i] = s;
  }
  return y;
}

double SymTridiag::quadratic(std::span<const double> x) const {
  const std::size_t n = size();
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    s += diag[i] * x[i] * x[i];
    if (i + 1 < n) s += 2.0 * off[i] * x[i] * x[i + 1];
  }
  return s;
}

std::vector<double> SymTridiag::solve(std::span<const double> rhs) const {
  const std::size_t n = size();
  std::vector<double> c(n), d(n);
  double denom = diag[0];
  if (denom == 0.0) throw DomainError("tridiagonal solve: zero pivot");
  c[0] = (n > 1 ? off[0] : 0.0) / denom;
  d[0] = rhs[0] / denom;
  for (std::size_t i = 1; i < n; ++i) {
    denom = diag[i] - off[i - 1] * c[i - 1];
    if (denom == 0.0 || !std::isfinite(denom)) throw DomainError("tridiagonal solve: zero pivot");
    c[i] = (i + 1 < n ? off[i] : 0.0) / denom;
    d[i] = (rhs[i] - off[i - 1] * d[i - 1]) / denom;
  }
  std::vector<double> x(n);
  x[n - 1] = d[n - 1];
  for (std::size_t i = n - 1; i-- > 0;) x[i] = d[i] - c[i] * x[i + 1];
  return x;
}

SymTridiag path_laplacian(std::span<const double> conductance) {
  const std::size_t n = conductance.size();
  SymTridiag a{std::vector<double>(n, 0.0), std::vector<double>(n > 0 ? n - 1 : 0, 0.0)};
  for (std::size_t k = 1; k < n; ++k) {
    a.diag[k] += conductance[k];
    a.diag[k - 1] += conductance[k];
    a.off[k - 1] -= conductance[k];
  }
  return a;
}

std::vector<double> solve_path_laplacian(std::span<const double> conductance,
                                         std::span<const double> rhs) {
  const std::size_t n = rhs.size();
  std::vector<double> phi(n, 0.0);
  double q = 0.0;  // flux through face k
  for (std::size_t k = 1; k < n; ++k) {
    q -= rhs[k - 1];
    if (!(conductance[k] > 0.0)) throw DomainError("path Laplacian: nonpositive conductance");
    phi[k] = phi[k - 1] + q / conductance[k];
  }
  return phi;
}

}  // namespace yamabe::variational
