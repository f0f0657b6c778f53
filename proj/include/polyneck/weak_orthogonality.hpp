#pragma once

// Near-independence of the exponentials e^{n_k t}, n_k = n + 2(k-1), on an
// interval of length L. With f_k the L^2(0, L)-normalized exponentials,
//
//   M_kl    = <f_k, f_l> = Mbar_kl (1 - e^{-(n_k+n_l)L}) / sqrt((1 - e^{-2n_k L})(1 - e^{-2n_l L}))
//   Mbar_kl = 2 sqrt(n_k n_l) / (n_k + n_l)      (the same Gram matrix on (0, inf))
//
// and E = M - Mbar >= 0 entrywise with |lambda(E)| <= 2m e^{-2nL} for L >= 1.
// Mbar is a Cauchy-like matrix; its determinant is an exact rational.

#include <Eigen/Dense>

#include "polyneck/exact.hpp"

namespace polyneck {

struct GramPair {
  int m = 0;
  int n = 0;
  double gap = 0.0;
  Eigen::MatrixXd M;
  Eigen::MatrixXd Mbar;
  /// M - Mbar, evaluated without cancellation via log1p/expm1.
  Eigen::MatrixXd E;
};

/// Throws PreconditionError for n < 1 and InvalidParameter for m < 1 or L < 1.
GramPair gram_pair(int m, int n, double gap);

/// prod_k (2 n_k) prod_{k<l} (n_k - n_l)^2 / prod_{k,l} (n_k + n_l) = det Mbar.
Rational cauchy_determinant(int m, int n);

/// det Mbar by partially pivoted LU in 100-digit binary floating point,
/// rounded to double. Independent of the Cauchy product.
double mbar_determinant_lu(int m, int n);

struct WeakOrthogonalityCertificate {
  int m = 0;
  int n = 0;
  double gap = 0.0;
  double lambda1 = 0.0;        ///< smallest eigenvalue of M
  double lambda1_bar = 0.0;    ///< smallest eigenvalue of Mbar
  double lambdaE_bound = 0.0;  ///< 2m e^{-2nL}
  double lambdaE_trace = 0.0;  ///< trace(E^2)^{1/2}
  double lambdaE_exact = 0.0;  ///< spectral radius of E
  Rational cauchy_det;
  double delta = 0.0;          ///< max(lambda1_bar - lambdaE_bound, 0)
  bool perturbation_holds = false;   ///< lambda1 >= lambda1_bar - lambdaE_bound - 1e-9
  bool factorization_holds = false;  ///< lambda1_bar >= det Mbar / m^{m-1}
  bool valid = false;
};

inline constexpr double kEigenTolerance = 1e-9;

WeakOrthogonalityCertificate weak_orthogonality_certificate(int m, int n, double gap);

/// min over 1 <= n <= n_max of e^{n L / 2} lambda1(M): the empirical constant
/// in lambda1 >= C e^{-nL/2}.
double empirical_decay_constant(int m, double gap, int n_max);

/// min over 1 <= n <= n_max of e^{n/2} det Mbar, from the exact determinant.
double scaled_determinant_minimum(int m, int n_max);

}  // namespace polyneck
