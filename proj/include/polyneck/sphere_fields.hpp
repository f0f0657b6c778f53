#pragma once

// Killing fields on S^{2m-1} and the radial-tangential splitting of vectors.
//
// The generators alpha_k = (E_ij - E_ji)/sqrt(2), i < j, form a
// trace-orthonormal basis of so(2m); X_k(x) = alpha_k x. They satisfy
//
//     sum_k X_k(x) X_k(x)^T = (|x|^2 I - x x^T) / 2,
//
// so Y_k = 2 X_k reproduces every tangent vector V at x:
//
//     V = |x|^{-2} sum_k <V, X_k(x)> Y_k(x).

#include <Eigen/Dense>
#include <vector>

namespace polyneck {

inline constexpr int kMaxSphereOrder = 8;
inline constexpr double kReproducingConstant = 2.0;

struct KillingBasis {
  int m = 0;
  std::vector<Eigen::MatrixXd> generators;

  int dimension() const { return 2 * m; }
  std::size_t size() const { return generators.size(); }
};

/// Throws InvalidParameter unless 1 <= m <= kMaxSphereOrder.
KillingBasis build_killing_basis(int m);

/// X_k(x) = alpha_k x.
Eigen::VectorXd killing_field(const KillingBasis& basis, std::size_t k, const Eigen::VectorXd& x);

/// sum_k X_k(x) X_k(x)^T.
Eigen::MatrixXd killing_outer_sum(const KillingBasis& basis, const Eigen::VectorXd& x);

/// |x|^{-2} sum_k <V, X_k(x)> Y_k(x) for V tangent at x.
/// Throws DomainError for x = 0 and PreconditionError when
/// |<x, V>| > 1e-12 |x| |V|.
Eigen::VectorXd tangential_reproduce(const KillingBasis& basis, const Eigen::VectorXd& x,
                                     const Eigen::VectorXd& v);

struct VectorDecomposition {
  double radial = 0.0;                    ///< <V, x/|x|>
  std::vector<double> tangential_coeffs;  ///< |x|^{-2} <V, X_k(x)>
};

VectorDecomposition decompose_vector(const KillingBasis& basis, const Eigen::VectorXd& x,
                                     const Eigen::VectorXd& v);

/// radial * x/|x| + sum_k coeffs[k] * Y_k(x).
Eigen::VectorXd reconstruct_vector(const KillingBasis& basis, const Eigen::VectorXd& x,
                                   const VectorDecomposition& parts);

}  // namespace polyneck
