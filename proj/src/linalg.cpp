#include "polyneck/linalg.hpp"

#include <algorithm>
#include <cmath>

#include "polyneck/errors.hpp"

namespace polyneck {

namespace {

constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const Eigen::MatrixXd& a) {
  double sum = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (i != j) sum += a(i, j) * a(i, j);
  return std::sqrt(sum);
}

// Annihilate a(p, q) with the rotation from Rutishauser's formulation.
void rotate(Eigen::MatrixXd& a, Eigen::Index p, Eigen::Index q) {
  const double apq = a(p, q);
  if (apq == 0.0) return;
  const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
  const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const double tau = s / (1.0 + c);

  a(p, p) -= t * apq;
  a(q, q) += t * apq;
  a(p, q) = a(q, p) = 0.0;
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    if (r == p || r == q) continue;
    const double arp = a(r, p);
    const double arq = a(r, q);
    a(r, p) = a(p, r) = arp - s * (arq + tau * arp);
    a(r, q) = a(q, r) = arq + s * (arp - tau * arq);
  }
}

}  // namespace

Eigen::VectorXd symmetric_eigenvalues(const Eigen::MatrixXd& s, double tol) {
  if (s.rows() != s.cols() || s.rows() == 0) throw InvalidParameter("matrix must be square and nonempty");
  const double scale = s.cwiseAbs().maxCoeff();
  if ((s - s.transpose()).cwiseAbs().maxCoeff() > 1e-12 * std::max(scale, 1.0))
    throw InvalidParameter("matrix is not symmetric");

  Eigen::MatrixXd a = 0.5 * (s + s.transpose());
  const double target = tol * a.norm();
  for (int sweep = 0; sweep < kMaxSweeps && off_diagonal_norm(a) > target; ++sweep)
    for (Eigen::Index p = 0; p + 1 < a.rows(); ++p)
      for (Eigen::Index q = p + 1; q < a.rows(); ++q) rotate(a, p, q);

  Eigen::VectorXd values = a.diagonal();
  std::sort(values.data(), values.data() + values.size());
  return values;
}

double smallest_eigenvalue(const Eigen::MatrixXd& s, double tol) {
  return symmetric_eigenvalues(s, tol)(0);
}

double spectral_radius(const Eigen::MatrixXd& s, double tol) {
  const auto values = symmetric_eigenvalues(s, tol);
  return std::max(std::abs(values(0)), std::abs(values(values.size() - 1)));
}

}  // namespace polyneck
