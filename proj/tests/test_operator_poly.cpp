#include <doctest.h>

#include "polyneck/errors.hpp"
#include "polyneck/operator_poly.hpp"
#include "polyneck/random.hpp"

using namespace polyneck;

namespace {

std::map<Monomial, Integer> terms(std::initializer_list<std::pair<Monomial, long>> list) {
  std::map<Monomial, Integer> out;
  for (const auto& [mono, c] : list) out[mono] = c;
  return out;
}

Rational random_rational(Rng& rng) {
  Rational r(rng.uniform_int(-40, 40), rng.uniform_int(1, 12));
  r.canonicalize();
  return r;
}

}  // namespace

TEST_CASE("small orders match hand expansions") {
  CHECK(build_operator_polynomial(1).coeffs.terms() == terms({{{2, 0}, 1}, {{0, 1}, 1}}));
  // (T^2 + S)^2 - 4 T^2
  CHECK(build_operator_polynomial(2).coeffs.terms() ==
        terms({{{4, 0}, 1}, {{2, 1}, 2}, {{0, 2}, 1}, {{2, 0}, -4}}));

  const auto p3 = build_operator_polynomial(3);
  CHECK(p3.coeffs.coefficient(6, 0) == 1);
  CHECK(p3.coeffs.coefficient(4, 0) == -20);
  CHECK(p3.coeffs.coefficient(2, 0) == 64);
}

TEST_CASE("order outside [1, cap] is rejected") {
  CHECK_THROWS_AS(build_operator_polynomial(0), InvalidParameter);
  CHECK_THROWS_AS(build_operator_polynomial(13), InvalidParameter);
  CHECK_NOTHROW(build_operator_polynomial(13, 13));
}

TEST_CASE("radial restriction") {
  CHECK(radial_restriction(build_operator_polynomial(1)) == UnivariatePolynomial{0, 0, 1});
  CHECK(radial_restriction(build_operator_polynomial(2)) == UnivariatePolynomial{0, 0, -4, 0, 1});
  CHECK(radial_restriction(build_operator_polynomial(3)) == UnivariatePolynomial{0, 0, 64, 0, -20, 0, 1});
  for (int m = 1; m <= kDefaultMaxOrder; ++m)
    CHECK(radial_restriction(build_operator_polynomial(m)) == radial_factorization(m));
}

TEST_CASE("evaluation at mode data") {
  const auto p2 = build_operator_polynomial(2);
  CHECK(evaluate_at_mode(p2, 1, -3) == 0);
  CHECK(evaluate_at_mode(p2, 2, 0) == 0);
  for (int m = 1; m <= 6; ++m) CHECK(evaluate_at_mode(build_operator_polynomial(m), 0, 0) == 0);

  CHECK(laplacian_mode_oracle(2, 1, 3) == 0);
  CHECK(laplacian_mode_oracle(1, 5, 0) == 25);
  CHECK(laplacian_mode_oracle(2, 0, 0) == 0);
}

TEST_CASE("structure checks pass and detect tampering") {
  for (int m : {1, 2, 8}) CHECK(verify_structure(build_operator_polynomial(m)).all_passed());

  auto tampered = build_operator_polynomial(3);
  tampered.coeffs.add_term(3, 1, 7);
  auto report = verify_structure(tampered);
  CHECK_FALSE(report.no_odd_p);
  REQUIRE(report.offending);
  CHECK(report.offending->p == 3);
  CHECK(*report.offending_value == 7);

  auto flipped = build_operator_polynomial(2);
  flipped.coeffs.add_term(2, 0, 8);  // a_{2,0}: -4 -> 4
  report = verify_structure(flipped);
  CHECK(report.no_odd_p);
  CHECK_FALSE(report.signs);
  CHECK_FALSE(report.factorization);
}

TEST_CASE("coefficient support and leading terms") {
  for (int m = 1; m <= kDefaultMaxOrder; ++m) {
    const auto poly = build_operator_polynomial(m);
    CHECK(poly.coeffs.coefficient(2 * m, 0) == 1);
    CHECK(poly.coeffs.coefficient(0, m) == 1);
    for (const auto& [mono, c] : poly.coeffs.terms()) {
      CHECK(mono.p + 2 * mono.q >= 1);
      CHECK(mono.p + 2 * mono.q <= 2 * m);
      CHECK(mono.p % 2 == 0);
      CHECK(c != 0);
    }
  }
}

TEST_CASE("symbol agrees with the iterated Laplacian on r^lambda phi") {
  Rng rng(2024);
  for (int m = 1; m <= kDefaultMaxOrder; ++m) {
    const auto poly = build_operator_polynomial(m);
    for (int s = 0; s < 200; ++s) {
      const Rational lambda = random_rational(rng);
      const Rational mu = random_rational(rng);
      REQUIRE(evaluate_at_mode(poly, lambda, -mu) == laplacian_mode_oracle(m, lambda, mu));
    }
  }
}

TEST_CASE("one recursion step from P_{m-1} reproduces P_m") {
  for (int m = 2; m <= kDefaultMaxOrder; ++m) {
    const auto chain = intermediate_polynomials(m);
    REQUIRE(chain.size() == static_cast<std::size_t>(m) + 1);
    CHECK(recursion_step(m, m - 1, chain[m - 1]) == build_operator_polynomial(m).coeffs);
  }
  // P_1 = T^2 + 2(m-1) T + S
  const auto chain = intermediate_polynomials(4);
  CHECK(chain[1].coefficient(1, 0) == 6);
  CHECK(chain[1].coefficient(0, 1) == 1);
}
