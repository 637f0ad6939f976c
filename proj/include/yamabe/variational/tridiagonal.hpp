#pragma once

#include <span>
#include <vector>

namespace yamabe::variational {

// Symmetric tridiagonal matrix: diag[i], off[i] = A(i, i+1) = A(i+1, i).
struct SymTridiag {
  std::vector<double> diag;
  std::vector<double> off;

  std::size_t size() const noexcept { return diag.size(); }

  std::vector<double> apply(std::span<const double> x) const;
  double quadratic(std::span<const double> x) const;

  // Thomas algorithm; requires a nonsingular (e.g. SPD) matrix.
  std::vector<double> solve(std::span<const double> rhs) const;
};

// Weighted path-graph Laplacian: (A phi)_i = -(q_{i+1} - q_i) with
// q_k = c_k (phi_k - phi_{k-1}) across interior faces k = 1..n-1 and no flux
// at the two ends. c[0] is ignored.
SymTridiag path_laplacian(std::span<const double> conductance);

// Solves A phi = rhs for the path Laplacian when sum(rhs) = 0, returning the
// solution with phi_0 = 0 (the kernel is the constants).
std::vector<double> solve_path_laplacian(std::span<const double> conductance,
                                         std::span<const double> rhs);

}  // namespace yamabe::variational
