#pragma once

// Test-only oracles. These deliberately avoid the library's own code paths:
// the eigenvalue oracle goes through Eigen's dense solver, everything else
// is plain double arithmetic.

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

#include "alopc/pc_matrix.hpp"

namespace alopc::testing {

/// Dominant eigenvalue of a positive matrix from a full dense eigensolve.
/// For positive matrices the eigenvalue of maximum modulus is real and
/// simple, so the max-modulus root is the one to report.
inline double dominant_eigenvalue_oracle(const PcMatrix& m) {
  const int n = m.size();
  Eigen::MatrixXd a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = m.at(i, j);

  const Eigen::EigenSolver<Eigen::MatrixXd> solver(a);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("dense eigensolver failed");
  }
  int best = 0;
  for (int i = 1; i < n; ++i) {
    if (std::abs(solver.eigenvalues()[i]) > std::abs(solver.eigenvalues()[best])) {
      best = i;
    }
  }
  const auto lambda = solver.eigenvalues()[best];
  if (std::abs(lambda.imag()) > 1e-8 * std::abs(lambda)) {
    throw std::runtime_error("dominant eigenvalue is not real");
  }
  return lambda.real();
}

}  // namespace alopc::testing
