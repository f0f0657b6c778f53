#include "polyneck/sphere_fields.hpp"

#include <cmath>
#include <string>

#include "polyneck/errors.hpp"

namespace polyneck {

namespace {

void check_dimensions(const KillingBasis& basis, const Eigen::VectorXd& x) {
  if (x.size() != basis.dimension())
    throw InvalidParameter("vector dimension " + std::to_string(x.size()) + " does not match 2m = " +
                           std::to_string(basis.dimension()));
  if (x.squaredNorm() == 0.0) throw DomainError("base point x must be nonzero");
}

}  // namespace

KillingBasis build_killing_basis(int m) {
  if (m < 1 || m > kMaxSphereOrder)
    throw InvalidParameter("sphere order m must lie in [1, " + std::to_string(kMaxSphereOrder) +
                           "], got " + std::to_string(m));
  KillingBasis basis{m, {}};
  const int d = 2 * m;
  const double entry = 1.0 / std::sqrt(2.0);
  basis.generators.reserve(static_cast<std::size_t>(m * (2 * m - 1)));
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      Eigen::MatrixXd alpha = Eigen::MatrixXd::Zero(d, d);
      alpha(i, j) = entry;
      alpha(j, i) = -entry;
      basis.generators.push_back(std::move(alpha));
    }
  }
  return basis;
}

Eigen::VectorXd killing_field(const KillingBasis& basis, std::size_t k, const Eigen::VectorXd& x) {
  return basis.generators.at(k) * x;
}

Eigen::MatrixXd killing_outer_sum(const KillingBasis& basis, const Eigen::VectorXd& x) {
  check_dimensions(basis, x);
  Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(basis.dimension(), basis.dimension());
  for (const auto& alpha : basis.generators) {
    const Eigen::VectorXd field = alpha * x;
    sum.noalias() += field * field.transpose();
  }
  return sum;
}

VectorDecomposition decompose_vector(const KillingBasis& basis, const Eigen::VectorXd& x,
                                     const Eigen::VectorXd& v) {
  check_dimensions(basis, x);
  if (v.size() != x.size()) throw InvalidParameter("V and x must have the same dimension");
  const double norm2 = x.squaredNorm();
  VectorDecomposition parts;
  parts.radial = v.dot(x) / std::sqrt(norm2);
  parts.tangential_coeffs.reserve(basis.size());
  for (const auto& alpha : basis.generators) parts.tangential_coeffs.push_back(v.dot(alpha * x) / norm2);
  return parts;
}

Eigen::VectorXd reconstruct_vector(const KillingBasis& basis, const Eigen::VectorXd& x,
                                   const VectorDecomposition& parts) {
  check_dimensions(basis, x);
  if (parts.tangential_coeffs.size() != basis.size())
    throw InvalidParameter("coefficient count does not match the Killing basis");
  Eigen::VectorXd out = parts.radial * x / x.norm();
  for (std::size_t k = 0; k < basis.size(); ++k)
    out += parts.tangential_coeffs[k] * kReproducingConstant * (basis.generators[k] * x);
  return out;
}

Eigen::VectorXd tangential_reproduce(const KillingBasis& basis, const Eigen::VectorXd& x,
                                     const Eigen::VectorXd& v) {
  check_dimensions(basis, x);
  if (v.size() != x.size()) throw InvalidParameter("V and x must have the same dimension");
  if (std::abs(x.dot(v)) > 1e-12 * x.norm() * v.norm())
    throw PreconditionError("V is not tangent at x: <x, V> exceeds 1e-12 |x||V|");
  auto parts = decompose_vector(basis, x, v);
  parts.radial = 0.0;
  return reconstruct_vector(basis, x, parts);
}

}  // namespace polyneck
