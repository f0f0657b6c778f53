#include <doctest.h>

#include <cmath>
#include <limits>

#include "oracles.hpp"
#include "polyneck/errors.hpp"
#include "polyneck/linalg.hpp"
#include "polyneck/three_circle.hpp"

using namespace polyneck;

namespace {

double closed_gram(int alpha, double a, double b) {
  return alpha == 0 ? b - a : (std::exp(alpha * b) - std::exp(alpha * a)) / alpha;
}

AnnulusField field_from_vector(int m, int n, const Eigen::VectorXd& coeffs) {
  AnnulusField f;
  f.m = m;
  f.zero_mode.c0.assign(m - 1, 0.0);
  f.zero_mode.d0.assign(m - 1, 0.0);
  ModeCoefficients mc;
  for (int k = 0; k < m; ++k) {
    mc.c.push_back(coeffs(k));
    mc.d.push_back(coeffs(m + k));
  }
  f.modes[{n, 1}] = mc;
  return f;
}

}  // namespace

TEST_CASE("interval Gram examples") {
  const std::vector<int> e{1, -1};
  const auto g = interval_gram(e, 0.0, 1.0);
  CHECK(g.entry(0, 1) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(g.entry(0, 0) == doctest::Approx((std::exp(2.0) - 1.0) / 2.0).epsilon(1e-15));
  CHECK(g.entry(1, 1) == doctest::Approx((1.0 - std::exp(-2.0)) / 2.0).epsilon(1e-15));

  const std::vector<int> two{2};
  CHECK(interval_gram(two, 0.0, 0.5).entry(0, 0) == doctest::Approx((std::exp(2.0) - 1.0) / 4.0).epsilon(1e-15));

  CHECK_THROWS_AS(interval_gram(e, 1.0, 1.0), InvalidParameter);
  CHECK_THROWS_AS(interval_gram(e, 2.0, 1.0), InvalidParameter);
}

TEST_CASE("interval Gram agrees with closed forms and quadrature") {
  for (int m = 1; m <= 3; ++m)
    for (int n : {1, 4, 9}) {
      const auto ex = mode_exponents(m, n);
      for (auto [a, b] : {std::pair{-0.7, 0.3}, std::pair{0.0, 1.5}, std::pair{-2.0, -1.0}}) {
        const auto g = interval_gram(ex, a, b);
        for (std::size_t j = 0; j < ex.size(); ++j)
          for (std::size_t k = 0; k < ex.size(); ++k) {
            const int alpha = ex[j] + ex[k];
            CHECK(oracle::close(g.entry(j, k), closed_gram(alpha, a, b), 1e-13));
            const double q = oracle::quadrature([&](double t) { return std::exp(alpha * t); }, a, b);
            CHECK(oracle::close(g.entry(j, k), q, 1e-10));
          }
      }
    }
}

TEST_CASE("mode exponents") {
  CHECK(mode_exponents(3, 2) == std::vector<int>{2, 4, 6, -2, -4, -6});
}

TEST_CASE("certificate examples") {
  CHECK_FALSE(three_circle_certificate(1, 1, 0.1).certified);
  CHECK(three_circle_certificate(1, 1, 3.0).certified);
  CHECK_THROWS_AS(three_circle_certificate(1, 0, 1.0), PreconditionError);
  CHECK_THROWS_AS(three_circle_certificate(1, 1, 0.0), InvalidParameter);
}

TEST_CASE("pure growing mode has the closed-form ratio") {
  for (double gap : {0.1, 0.5, 1.0, 3.0}) {
    const auto f = field_from_vector(1, 1, Eigen::Vector2d(1.0, 0.0));
    // RHS/LHS = (e^L + e^{-3L}) / 2, so the ratio is its reciprocal.
    CHECK(three_circle_ratio(f, gap) ==
          doctest::Approx(2.0 / (std::exp(gap) + std::exp(-3.0 * gap))).epsilon(1e-13));
  }
}

TEST_CASE("min_L search") {
  const double l11 = min_L(1, 1);
  CHECK(l11 > 0.1);
  CHECK(l11 < 3.0);
  CHECK(three_circle_certificate(1, 1, l11).certified);
  CHECK_FALSE(three_circle_certificate(1, 1, l11 - 1e-3).certified);
  CHECK(min_L(1, 5) <= l11);

  const double l21 = min_L(2, 1);
  CHECK(std::isfinite(l21));
  CHECK(l21 <= kDefaultGapCap);
  CHECK_THROWS_AS(min_L(3, 1, 1e-3, 0.5), SearchFailure);
}

TEST_CASE("uniform report") {
  const auto single = uniform_L_report(1, 1);
  CHECK(single.L_star == min_L(1, 1));
  CHECK(single.all_certified);

  const auto r = uniform_L_report(2, 50);
  CHECK(r.all_certified);
  CHECK(r.L_star <= kDefaultGapCap);
  for (int n = 1; n <= 50; ++n) {
    CHECK(r.min_gap[n - 1] <= r.L_star);
    CHECK(r.margin_at_Lstar[n - 1] > r.threshold_at_Lstar[n - 1]);
  }
  CHECK(std::isfinite(uniform_L_report(3, 20).L_star));
}

TEST_CASE("quadratic form equals quadrature of the profile") {
  Rng rng(19);
  for (int trial = 0; trial < 60; ++trial) {
    const int m = rng.uniform_int(1, 3);
    const int n = rng.uniform_int(1, 4);
    const double gap = rng.uniform(0.2, 2.0);
    const auto form = three_circle_form(m, n, gap);
    const auto ex = mode_exponents(m, n);
    Eigen::VectorXd c(2 * m);
    for (int j = 0; j < 2 * m; ++j) c(j) = rng.normal();

    auto g2 = [&](double t) {
      double v = 0.0;
      for (int j = 0; j < 2 * m; ++j) v += c(j) * std::exp(ex[j] * t);
      return v * v;
    };
    const double h = gap / 2.0;
    const double expected = std::exp(-gap) * (oracle::quadrature(g2, -3 * h, -h) + oracle::quadrature(g2, h, 3 * h)) -
                            2.0 * oracle::quadrature(g2, -h, h);
    const double scale = std::exp(-gap) * (oracle::quadrature(g2, -3 * h, -h) + oracle::quadrature(g2, h, 3 * h)) +
                         2.0 * oracle::quadrature(g2, -h, h);
    const double got = c.dot(form.raw() * c);
    REQUIRE(std::abs(got - expected) <= 1e-9 * scale);
  }
}

TEST_CASE("outcome is invariant under diagonal rescaling and placement") {
  Rng rng(23);
  for (int m = 1; m <= 3; ++m)
    for (int n : {1, 2, 7}) {
      for (double gap = 0.25; gap <= 6.0; gap += 0.25) {
        const auto form = three_circle_form(m, n, gap);
        const bool certified = three_circle_certificate(m, n, gap).certified;
        CHECK(three_circle_certificate(m, n, gap, Placement::Shifted).certified == certified);

        Eigen::VectorXd scale(2 * m);
        for (int j = 0; j < 2 * m; ++j) scale(j) = std::exp(rng.uniform(-2.0, 2.0));
        const Eigen::MatrixXd rescaled = scale.asDiagonal() * form.normalized() * scale.asDiagonal();
        const double trace = (scale.asDiagonal() * (form.rhs + form.lhs) * scale.asDiagonal()).trace();
        const double margin = smallest_eigenvalue(rescaled);
        // Skip only decisions sitting on the tolerance boundary.
        if (std::abs(margin) > 1e-6 * trace) CHECK((margin > 0) == certified);
      }
    }
}

TEST_CASE("single-mode ratio is the Rayleigh quotient") {
  Rng rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    const int m = rng.uniform_int(1, 3);
    const int n = rng.uniform_int(1, 5);
    const double gap = rng.uniform(0.5, 4.0);
    Eigen::VectorXd c(2 * m);
    for (int j = 0; j < 2 * m; ++j) c(j) = rng.normal();
    // Shifted placement: center [-L, 0], neighbours [-2L, -L] and [0, L].
    const auto form = three_circle_form(m, n, gap, Placement::Shifted);
    const Eigen::VectorXd lc = form.log_normalizer.array().exp().matrix().cwiseInverse().cwiseProduct(c);
    const double rayleigh = lc.dot(form.lhs * lc) / lc.dot(form.rhs * lc);
    REQUIRE(oracle::close(three_circle_ratio(field_from_vector(m, n, c), gap), rayleigh, 1e-11));
  }
}

TEST_CASE("random multi-mode fields") {
  AnnulusField zero;
  zero.m = 2;
  zero.zero_mode.c0 = {0.0};
  zero.zero_mode.d0 = {0.0};
  CHECK(std::isnan(three_circle_ratio(zero, 1.0)));

  const double l_star = uniform_L_report(2, 20).L_star;
  const auto r = random_field_check(2, l_star, 2000, 42);
  CHECK(r.passed);
  CHECK(r.worst_ratio < 1.0);
  CHECK(r.checked + r.skipped == r.trials);

  const auto again = random_field_check(2, l_star, 2000, 42);
  CHECK(again.worst_ratio == r.worst_ratio);

  Rng rng(1);
  for (int i = 0; i < 100; ++i) {
    const auto f = random_zero_average_field(3, 20, rng);
    CHECK(f.zero_average());
    CHECK(f.modes.size() >= 1);
    CHECK(f.modes.size() <= 5);
    CHECK_NOTHROW(validate_field(f));
  }
}
