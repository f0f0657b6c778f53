#pragma once

#include <Eigen/Dense>

namespace polyneck {

/// Eigenvalues of a real symmetric matrix in ascending order, by the cyclic
/// Jacobi method. Sweeps stop once the off-diagonal Frobenius norm is below
/// tol * ||S||_F. Throws InvalidParameter if S is not square or not symmetric
/// to 1e-12 (relative to its largest entry).
Eigen::VectorXd symmetric_eigenvalues(const Eigen::MatrixXd& s, double tol = 1e-15);

double smallest_eigenvalue(const Eigen::MatrixXd& s, double tol = 1e-15);

/// max |eigenvalue|.
double spectral_radius(const Eigen::MatrixXd& s, double tol = 1e-15);

}  // namespace polyneck
