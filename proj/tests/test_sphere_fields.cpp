#include <doctest.h>

#include "polyneck/errors.hpp"
#include "polyneck/random.hpp"
#include "polyneck/sphere_fields.hpp"

using namespace polyneck;

namespace {

Eigen::VectorXd unit(int d, int i) { return Eigen::VectorXd::Unit(d, i); }

Eigen::VectorXd random_vector(int d, Rng& rng) {
  Eigen::VectorXd v(d);
  for (int i = 0; i < d; ++i) v(i) = rng.normal();
  return v;
}

}  // namespace

TEST_CASE("generator count, antisymmetry and orthonormality") {
  CHECK(build_killing_basis(1).size() == 1);
  CHECK(build_killing_basis(2).size() == 6);
  CHECK(build_killing_basis(3).size() == 15);
  for (int m = 1; m <= 4; ++m) {
    const auto basis = build_killing_basis(m);
    CHECK(basis.size() == static_cast<std::size_t>(m * (2 * m - 1)));
    for (std::size_t a = 0; a < basis.size(); ++a) {
      CHECK((basis.generators[a] + basis.generators[a].transpose()).norm() == 0.0);
      for (std::size_t b = 0; b < basis.size(); ++b) {
        const double inner = (basis.generators[a].transpose() * basis.generators[b]).trace();
        CHECK(inner == doctest::Approx(a == b ? 1.0 : 0.0).epsilon(1e-14));
      }
    }
  }
  CHECK_THROWS_AS(build_killing_basis(0), InvalidParameter);
  CHECK_THROWS_AS(build_killing_basis(9), InvalidParameter);
}

TEST_CASE("tangential reproduction examples") {
  const auto b1 = build_killing_basis(1);
  CHECK((tangential_reproduce(b1, unit(2, 0), unit(2, 1)) - unit(2, 1)).norm() < 1e-15);

  const auto b2 = build_killing_basis(2);
  CHECK((tangential_reproduce(b2, unit(4, 0), unit(4, 2)) - unit(4, 2)).norm() < 1e-15);
  CHECK((tangential_reproduce(b2, 3.0 * unit(4, 1), unit(4, 3)) - unit(4, 3)).norm() < 1e-15);
}

TEST_CASE("reproduction rejects radial vectors and the origin") {
  const auto b2 = build_killing_basis(2);
  CHECK_THROWS_AS(tangential_reproduce(b2, unit(4, 0), unit(4, 0) + unit(4, 2)), PreconditionError);
  CHECK_THROWS_AS(tangential_reproduce(b2, Eigen::VectorXd::Zero(4), unit(4, 2)), DomainError);
  CHECK_THROWS_AS(decompose_vector(b2, Eigen::VectorXd::Zero(4), unit(4, 2)), DomainError);
  CHECK_THROWS_AS(tangential_reproduce(b2, unit(3, 0), unit(3, 1)), InvalidParameter);
}

TEST_CASE("decomposition examples") {
  const auto b2 = build_killing_basis(2);
  auto parts = decompose_vector(b2, 2.0 * unit(4, 0), unit(4, 0));
  CHECK(parts.radial == doctest::Approx(1.0));
  for (double c : parts.tangential_coeffs) CHECK(c == 0.0);

  const auto b1 = build_killing_basis(1);
  parts = decompose_vector(b1, unit(2, 0), unit(2, 1));
  CHECK(parts.radial == 0.0);
  REQUIRE(parts.tangential_coeffs.size() == 1);
  CHECK(std::abs(parts.tangential_coeffs[0]) == doctest::Approx(1.0 / std::sqrt(2.0)));

  const Eigen::VectorXd v = unit(4, 0) + unit(4, 2);
  parts = decompose_vector(b2, unit(4, 0), v);
  CHECK(parts.radial == doctest::Approx(1.0));
  CHECK((reconstruct_vector(b2, unit(4, 0), parts) - v).norm() < 1e-15);
}

TEST_CASE("random tangent vectors are reproduced and the outer-sum identity holds") {
  Rng rng(11);
  for (int m = 1; m <= 4; ++m) {
    const auto basis = build_killing_basis(m);
    const int d = 2 * m;
    for (int t = 0; t < 1000; ++t) {
      const Eigen::VectorXd x = random_vector(d, rng);
      Eigen::VectorXd v = random_vector(d, rng);
      const Eigen::VectorXd full = v;
      v -= (v.dot(x) / x.squaredNorm()) * x;

      REQUIRE((tangential_reproduce(basis, x, v) - v).norm() <= 1e-12 * v.norm());
      const Eigen::MatrixXd expected = 0.5 * (x.squaredNorm() * Eigen::MatrixXd::Identity(d, d) - x * x.transpose());
      REQUIRE((killing_outer_sum(basis, x) - expected).norm() <= 1e-12 * x.squaredNorm());
      const auto parts = decompose_vector(basis, x, full);
      REQUIRE((reconstruct_vector(basis, x, parts) - full).norm() <= 1e-12 * full.norm());
    }
  }
}

TEST_CASE("reconstruction is invariant under scaling of the base point") {
  Rng rng(5);
  const auto basis = build_killing_basis(3);
  for (int t = 0; t < 50; ++t) {
    const Eigen::VectorXd x = random_vector(6, rng);
    const Eigen::VectorXd v = random_vector(6, rng);
    const double c = rng.uniform(0.1, 10.0);
    const auto at_x = reconstruct_vector(basis, x, decompose_vector(basis, x, v));
    const auto at_cx = reconstruct_vector(basis, c * x, decompose_vector(basis, c * x, v));
    CHECK((at_x - at_cx).norm() <= 1e-12 * v.norm());
  }
}
