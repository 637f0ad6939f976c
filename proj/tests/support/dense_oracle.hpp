#pragma once

// Dense generalized eigensolver used as an oracle for inverse iteration.

#include <Eigen/Dense>
#include <span>
#include <vector>

namespace testing_support {

// All generalized eigenvalues of the path Laplacian pencil, ascending.
inline std::vector<double> dense_pencil_eigenvalues(std::span<const double> conductance,
                                                    std::span<const double> mass) {
  const Eigen::Index n = static_cast<Eigen::Index>(mass.size());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index k = 1; k < n; ++k) {
    const double c = conductance[static_cast<std::size_t>(k)];
    a(k, k) += c;
    a(k - 1, k - 1) += c;
    a(k, k - 1) -= c;
    a(k - 1, k) -= c;
  }
  for (Eigen::Index i = 0; i < n; ++i) b(i, i) = mass[static_cast<std::size_t>(i)];
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, b);
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + n};
}

}  // namespace testing_support
