#include "polyneck/weak_orthogonality.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <limits>
#include <utility>
#include <vector>

#include "polyneck/errors.hpp"
#include "polyneck/linalg.hpp"

namespace polyneck {

namespace {

void check_mode(int m, int n) {
  if (m < 1) throw InvalidParameter("order m must be >= 1");
  if (n < 1) throw PreconditionError("mode n must be >= 1");
}

std::vector<int> growing_exponents(int m, int n) {
  std::vector<int> out;
  for (int k = 1; k <= m; ++k) out.push_back(n + 2 * (k - 1));
  return out;
}

}  // namespace

GramPair gram_pair(int m, int n, double gap) {
  check_mode(m, n);
  if (!(gap >= 1.0)) throw InvalidParameter("gram_pair requires L >= 1");
  const auto nk = growing_exponents(m, n);
  GramPair pair{m, n, gap, Eigen::MatrixXd(m, m), Eigen::MatrixXd(m, m), Eigen::MatrixXd(m, m)};
  for (int k = 0; k < m; ++k) {
    for (int l = 0; l < m; ++l) {
      const double a = nk[k], b = nk[l];
      const double bar = 2.0 * std::sqrt(a * b) / (a + b);
      // log of the correction factor; every exponential is negative.
      const double log_ratio = std::log1p(-std::exp(-(a + b) * gap)) -
                               0.5 * std::log1p(-std::exp(-2.0 * a * gap)) -
                               0.5 * std::log1p(-std::exp(-2.0 * b * gap));
      pair.Mbar(k, l) = bar;
      pair.E(k, l) = bar * std::expm1(log_ratio);
      pair.M(k, l) = k == l ? 1.0 : bar * std::exp(log_ratio);
    }
    pair.Mbar(k, k) = 1.0;
    pair.E(k, k) = 0.0;
  }
  return pair;
}

Rational cauchy_determinant(int m, int n) {
  check_mode(m, n);
  const auto nk = growing_exponents(m, n);
  Rational numerator(1), denominator(1);
  for (int k = 0; k < m; ++k) {
    numerator *= 2 * nk[k];
    for (int l = 0; l < m; ++l) {
      denominator *= nk[k] + nk[l];
      if (k < l) numerator *= (nk[k] - nk[l]) * (nk[k] - nk[l]);
    }
  }
  Rational det = numerator / denominator;
  det.canonicalize();
  return det;
}

double mbar_determinant_lu(int m, int n) {
  check_mode(m, n);
  using Real = boost::multiprecision::cpp_bin_float_100;
  const auto nk = growing_exponents(m, n);
  std::vector<std::vector<Real>> a(m, std::vector<Real>(m));
  for (int k = 0; k < m; ++k)
    for (int l = 0; l < m; ++l)
      a[k][l] = 2 * sqrt(Real(nk[k]) * nk[l]) / Real(nk[k] + nk[l]);

  Real det = 1;
  for (int col = 0; col < m; ++col) {
    int pivot = col;
    for (int r = col + 1; r < m; ++r)
      if (abs(a[r][col]) > abs(a[pivot][col])) pivot = r;
    if (a[pivot][col] == 0) return 0.0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (int r = col + 1; r < m; ++r) {
      const Real factor = a[r][col] / a[col][col];
      for (int c = col; c < m; ++c) a[r][c] -= factor * a[col][c];
    }
  }
  return det.convert_to<double>();
}

WeakOrthogonalityCertificate weak_orthogonality_certificate(int m, int n, double gap) {
  const auto pair = gram_pair(m, n, gap);
  WeakOrthogonalityCertificate cert;
  cert.m = m;
  cert.n = n;
  cert.gap = gap;
  cert.lambda1 = smallest_eigenvalue(pair.M);
  cert.lambda1_bar = smallest_eigenvalue(pair.Mbar);
  cert.lambdaE_bound = 2.0 * m * std::exp(-2.0 * n * gap);
  cert.lambdaE_trace = std::sqrt((pair.E * pair.E).trace());
  cert.lambdaE_exact = spectral_radius(pair.E);
  cert.cauchy_det = cauchy_determinant(m, n);

  const double proof_bound = cert.lambda1_bar - cert.lambdaE_bound;
  cert.delta = std::max(proof_bound, 0.0);
  cert.perturbation_holds = cert.lambda1 >= proof_bound - kEigenTolerance;
  // Each eigenvalue of Mbar is below trace(Mbar) = m.
  const double factor_bound = cert.cauchy_det.get_d() / std::pow(static_cast<double>(m), m - 1);
  // Slack covers the Jacobi round-off, which is absolute on the scale ||Mbar|| <= m.
  const double roundoff = 64.0 * std::numeric_limits<double>::epsilon() * m;
  cert.factorization_holds = cert.lambda1_bar >= factor_bound - roundoff;
  cert.valid = cert.perturbation_holds && cert.factorization_holds &&
               cert.lambda1 >= cert.delta - kEigenTolerance;
  return cert;
}

double empirical_decay_constant(int m, double gap, int n_max) {
  if (n_max < 1) throw InvalidParameter("n_max must be >= 1");
  double best = std::numeric_limits<double>::infinity();
  for (int n = 1; n <= n_max; ++n) {
    const auto pair = gram_pair(m, n, gap);
    best = std::min(best, std::exp(0.5 * n * gap) * smallest_eigenvalue(pair.M));
  }
  return best;
}

double scaled_determinant_minimum(int m, int n_max) {
  if (n_max < 1) throw InvalidParameter("n_max must be >= 1");
  double best = std::numeric_limits<double>::infinity();
  for (int n = 1; n <= n_max; ++n) {
    // e^{n/2} det in the log domain; the exact determinant is tiny for large n.
    const Rational det = cauchy_determinant(m, n);
    long exp_num = 0, exp_den = 0;
    const double mant_num = mpz_get_d_2exp(&exp_num, det.get_num_mpz_t());
    const double mant_den = mpz_get_d_2exp(&exp_den, det.get_den_mpz_t());
    const double log_det = std::log(mant_num / mant_den) + (exp_num - exp_den) * std::log(2.0);
    best = std::min(best, std::exp(0.5 * n + log_det));
  }
  return best;
}

}  // namespace polyneck
