#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "polyneck/errors.hpp"
#include "polyneck/linalg.hpp"
#include "polyneck/random.hpp"
#include "polyneck/three_circle.hpp"
#include "polyneck/weak_orthogonality.hpp"

using namespace polyneck;

namespace {

// <f_k, f_l> on (0, L) for the L^2-normalized exponentials, by quadrature.
double quadrature_M(int nk, int nl, double gap) {
  auto norm = [&](int a) { return std::sqrt(oracle::quadrature([&](double t) { return std::exp(2 * a * t); }, 0, gap)); };
  const double ip = oracle::quadrature([&](double t) { return std::exp((nk + nl) * t); }, 0, gap);
  return ip / (norm(nk) * norm(nl));
}

}  // namespace

TEST_CASE("Gram pair examples") {
  auto g = gram_pair(2, 1, 1.0);
  CHECK(g.Mbar(0, 1) == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-15));
  CHECK(g.M(0, 1) == doctest::Approx(0.91541).epsilon(1e-5));
  CHECK(oracle::close(g.M(0, 1), quadrature_M(1, 3, 1.0), 1e-10));
  CHECK(smallest_eigenvalue(g.M) == doctest::Approx(0.0846).epsilon(1e-3));

  for (int n : {1, 5, 30}) {
    g = gram_pair(1, n, 2.0);
    CHECK(g.M(0, 0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(g.Mbar(0, 0) == 1.0);
  }

  CHECK_THROWS_AS(gram_pair(2, 0, 1.0), PreconditionError);
  CHECK_THROWS_AS(gram_pair(2, 1, 0.5), InvalidParameter);
}

TEST_CASE("M agrees with the interval Gram of the normalized basis") {
  for (int m = 1; m <= 4; ++m)
    for (int n : {1, 3, 10})
      for (double gap : {1.0, 2.0}) {
        const auto g = gram_pair(m, n, gap);
        std::vector<int> ex;
        for (int k = 0; k < m; ++k) ex.push_back(n + 2 * k);
        const auto s = interval_gram(ex, 0.0, gap);
        for (int k = 0; k < m; ++k)
          for (int l = 0; l < m; ++l) {
            const double expected =
                std::exp(s.log_entries(k, l) - 0.5 * (s.log_entries(k, k) + s.log_entries(l, l)));
            CHECK(oracle::close(g.M(k, l), expected, 1e-10));
            CHECK(g.E(k, l) >= 0.0);
            CHECK(oracle::close(g.E(k, l), g.M(k, l) - g.Mbar(k, l), 1e-12, 1e-15));
          }
      }
}

TEST_CASE("Cauchy determinant") {
  CHECK(cauchy_determinant(2, 1) == Rational(1, 4));
  CHECK(cauchy_determinant(2, 2) == Rational(1, 9));
  for (int n : {1, 7, 40}) CHECK(cauchy_determinant(1, n) == 1);

  // det Mbar = prod(2 n_k) det[1 / (n_k + n_l)].
  for (int m = 1; m <= 5; ++m)
    for (int n : {1, 2, 5, 13}) {
      std::vector<std::vector<Rational>> c(m, std::vector<Rational>(m));
      Rational scale = 1;
      for (int k = 0; k < m; ++k) {
        scale *= 2 * (n + 2 * k);
        for (int l = 0; l < m; ++l) c[k][l] = Rational(1, (n + 2 * k) + (n + 2 * l));
      }
      CHECK(cauchy_determinant(m, n) == scale * oracle::determinant(c));
    }
}

TEST_CASE("floating determinant matches the exact one") {
  for (int m = 1; m <= 5; ++m)
    for (int n = 1; n <= 50; ++n)
      REQUIRE(oracle::close(mbar_determinant_lu(m, n), cauchy_determinant(m, n).get_d(), 1e-10));
}

TEST_CASE("certificate examples") {
  auto c = weak_orthogonality_certificate(2, 1, 4.0);
  CHECK(c.lambdaE_bound == doctest::Approx(4.0 * std::exp(-8.0)).epsilon(1e-14));
  CHECK(c.lambda1_bar == doctest::Approx(1.0 - std::sqrt(3.0) / 2.0).epsilon(1e-12));
  CHECK(c.delta == doctest::Approx(0.132633).epsilon(1e-5));
  CHECK(c.lambda1 >= c.delta);
  CHECK(c.valid);

  c = weak_orthogonality_certificate(2, 1, 1.0);
  CHECK(c.lambdaE_bound == doctest::Approx(0.541341).epsilon(1e-5));
  CHECK(c.delta == 0.0);
  CHECK(c.lambda1 == doctest::Approx(0.0846).epsilon(1e-3));
  CHECK(c.perturbation_holds);

  for (int n : {1, 3}) {
    c = weak_orthogonality_certificate(1, n, 1.5);
    CHECK(c.lambda1 == doctest::Approx(1.0));
    CHECK(c.lambda1_bar == 1.0);
    CHECK(c.delta == doctest::Approx(1.0 - 2.0 * std::exp(-2.0 * n * 1.5)).epsilon(1e-14));
  }
}

TEST_CASE("perturbation sweep") {
  for (int m = 1; m <= 5; ++m)
    for (int n = 1; n <= 50; ++n)
      for (double gap : {1.0, 2.0, 4.0}) {
        const auto c = weak_orthogonality_certificate(m, n, gap);
        REQUIRE(c.lambdaE_trace <= c.lambdaE_bound + 1e-12);
        REQUIRE(c.lambdaE_exact <= c.lambdaE_trace + 1e-15);
        REQUIRE(c.lambda1 >= c.lambda1_bar - c.lambdaE_exact - 1e-9);
        REQUIRE(c.perturbation_holds);
        REQUIRE(c.factorization_holds);
        REQUIRE(c.valid);
      }
}

TEST_CASE("scaled determinant stays positive") {
  for (int m = 1; m <= 5; ++m) {
    const double v = scaled_determinant_minimum(m, 200);
    CHECK(v > 0.0);
    CHECK(std::isfinite(v));
  }
  CHECK(scaled_determinant_minimum(1, 10) == doctest::Approx(std::exp(0.5)));
  CHECK(empirical_decay_constant(2, 1.0, 20) > 0.0);
}

TEST_CASE("quadratic form lower bound") {
  Rng rng(31);
  for (int trial = 0; trial < 1000; ++trial) {
    const int m = rng.uniform_int(1, 5);
    const int n = rng.uniform_int(1, 20);
    const double gap = rng.uniform(1.0, 4.0);
    const auto g = gram_pair(m, n, gap);
    const double lambda1 = smallest_eigenvalue(g.M);
    Eigen::VectorXd a(m);
    for (int k = 0; k < m; ++k) a(k) = rng.normal();
    REQUIRE(a.dot(g.M * a) >= (lambda1 - 1e-9) * a.squaredNorm());
  }
}
