#include "polyneck/operator_poly.hpp"

#include <string>

#include "polyneck/errors.hpp"

namespace polyneck {

SymbolPolynomial SymbolPolynomial::constant(const Integer& c) { return monomial(0, 0, c); }

SymbolPolynomial SymbolPolynomial::monomial(int p, int q, const Integer& c) {
  SymbolPolynomial out;
  out.add_term(p, q, c);
  return out;
}

Integer SymbolPolynomial::coefficient(int p, int q) const {
  auto it = terms_.find({p, q});
  return it == terms_.end() ? Integer(0) : it->second;
}

void SymbolPolynomial::add_term(int p, int q, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(Monomial{p, q}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SymbolPolynomial& SymbolPolynomial::operator+=(const SymbolPolynomial& other) {
  for (const auto& [mono, c] : other.terms_) add_term(mono.p, mono.q, c);
  return *this;
}

SymbolPolynomial operator*(const SymbolPolynomial& a, const SymbolPolynomial& b) {
  SymbolPolynomial out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma.p + mb.p, ma.q + mb.q, ca * cb);
  return out;
}

Rational SymbolPolynomial::evaluate(const Rational& t, const Rational& s) const {
  Rational sum(0);
  for (const auto& [mono, c] : terms_)
    sum += Rational(c) * pow(t, static_cast<unsigned>(mono.p)) * pow(s, static_cast<unsigned>(mono.q));
  return sum;
}

SymbolPolynomial recursion_factor(int m, int l) {
  SymbolPolynomial f;
  f.add_term(2, 0, 1);
  f.add_term(0, 1, 1);
  f.add_term(0, 0, Integer(-4 * l * (m - 1 - l)));
  f.add_term(1, 0, Integer(2 * (m - 1 - 2 * l)));
  return f;
}

SymbolPolynomial recursion_step(int m, int l, const SymbolPolynomial& previous) {
  return recursion_factor(m, l) * previous;
}

namespace {

void check_order(int m, int max_order) {
  if (m < 1 || m > max_order)
    throw InvalidParameter("order m must lie in [1, " + std::to_string(max_order) +
                           "], got " + std::to_string(m));
}

}  // namespace

std::vector<SymbolPolynomial> intermediate_polynomials(int m, int max_order) {
  check_order(m, max_order);
  std::vector<SymbolPolynomial> chain;
  chain.reserve(static_cast<std::size_t>(m) + 1);
  chain.push_back(SymbolPolynomial::constant(1));
  for (int l = 0; l < m; ++l) chain.push_back(recursion_step(m, l, chain.back()));
  return chain;
}

OperatorPolynomial build_operator_polynomial(int m, int max_order) {
  auto chain = intermediate_polynomials(m, max_order);
  return OperatorPolynomial{m, std::move(chain.back())};
}

namespace {

void trim(UnivariatePolynomial& poly) {
  while (!poly.empty() && poly.back() == 0) poly.pop_back();
}

UnivariatePolynomial multiply(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  if (a.empty() || b.empty()) return {};
  UnivariatePolynomial out(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

}  // namespace

UnivariatePolynomial radial_restriction(const OperatorPolynomial& poly) {
  UnivariatePolynomial out;
  for (const auto& [mono, c] : poly.coeffs.terms()) {
    if (mono.q != 0) continue;
    if (out.size() <= static_cast<std::size_t>(mono.p)) out.resize(mono.p + 1, Integer(0));
    out[mono.p] = c;
  }
  trim(out);
  return out;
}

UnivariatePolynomial radial_factorization(int m) {
  UnivariatePolynomial out{0, 0, 1};
  for (int j = 1; j < m; ++j) out = multiply(out, {Integer(-4 * j * j), 0, 1});
  return out;
}

Rational evaluate_at_mode(const OperatorPolynomial& poly, const Rational& lambda,
                          const Rational& eig) {
  return poly.coeffs.evaluate(lambda, eig);
}

Rational laplacian_mode_oracle(int m, const Rational& lambda, const Rational& mu) {
  Rational product(1);
  for (int j = 0; j < m; ++j) {
    const Rational a = lambda - 2 * j;
    product *= a * (a + 2 * m - 2) - mu;
  }
  return product;
}

StructureReport verify_structure(const OperatorPolynomial& poly) {
  StructureReport report;
  auto flag = [&](const Monomial& mono, const Integer& value) {
    if (!report.offending) {
      report.offending = mono;
      report.offending_value = value;
    }
  };

  for (const auto& [mono, c] : poly.coeffs.terms()) {
    if (mono.p % 2 != 0) {
      report.no_odd_p = false;
      flag(mono, c);
    }
  }

  // (-1)^{m - p/2} a_{p,0} > 0 for p = 2, 4, ..., 2m.
  for (int p = 2; p <= 2 * poly.m; p += 2) {
    const Integer a = poly.coeffs.coefficient(p, 0);
    const bool negate = (poly.m - p / 2) % 2 != 0;
    const Integer signed_a = negate ? Integer(-a) : a;
    if (signed_a <= 0) {
      report.signs = false;
      flag({p, 0}, a);
    }
  }

  const auto radial = radial_restriction(poly);
  const auto expected = radial_factorization(poly.m);
  if (radial != expected) {
    report.factorization = false;
    for (std::size_t p = 0; p < std::max(radial.size(), expected.size()); ++p) {
      const Integer have = p < radial.size() ? radial[p] : Integer(0);
      const Integer want = p < expected.size() ? expected[p] : Integer(0);
      if (have != want) {
        flag({static_cast<int>(p), 0}, have);
        break;
      }
    }
  }
  return report;
}

Rational evaluate(const UnivariatePolynomial& poly, const Rational& x) {
  Rational acc(0);
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

UnivariatePolynomial derivative(const UnivariatePolynomial& poly) {
  UnivariatePolynomial out;
  for (std::size_t i = 1; i < poly.size(); ++i) out.push_back(poly[i] * Integer(static_cast<long>(i)));
  trim(out);
  return out;
}

}  // namespace polyneck
