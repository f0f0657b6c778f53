#include "polyneck/jet_pohozaev.hpp"

#include <algorithm>
#include <sstream>

#include "polyneck/errors.hpp"
#include "polyneck/operator_poly.hpp"

namespace polyneck {

namespace {

Rational sign(int exponent) { return (exponent % 2 == 0) ? Rational(1) : Rational(-1); }

Rational radial_coefficient(const OperatorPolynomial& poly, int n) {
  return Rational(poly.coeffs.coefficient(2 * n, 0));
}

}  // namespace

JetPolynomial JetPolynomial::constant(const Rational& c) {
  JetPolynomial p;
  p.add_term({}, c);
  return p;
}

JetPolynomial JetPolynomial::generator(int j, const Rational& c) {
  JetPolynomial p;
  p.add_term({j}, c);
  return p;
}

JetPolynomial JetPolynomial::product(int i, int j, const Rational& c) {
  JetPolynomial p;
  p.add_term({i, j}, c);
  return p;
}

void JetPolynomial::add_term(JetMonomial monomial, const Rational& c) {
  if (c == 0) return;
  std::sort(monomial.begin(), monomial.end());
  auto [it, inserted] = terms_.try_emplace(std::move(monomial), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

JetPolynomial& JetPolynomial::operator+=(const JetPolynomial& other) {
  for (const auto& [mono, c] : other.terms_) add_term(mono, c);
  return *this;
}

JetPolynomial& JetPolynomial::operator-=(const JetPolynomial& other) {
  for (const auto& [mono, c] : other.terms_) add_term(mono, -c);
  return *this;
}

JetPolynomial& JetPolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [mono, coeff] : terms_) coeff *= c;
  return *this;
}

JetPolynomial operator*(const JetPolynomial& a, const JetPolynomial& b) {
  JetPolynomial out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      JetMonomial merged(ma);
      merged.insert(merged.end(), mb.begin(), mb.end());
      out.add_term(std::move(merged), ca * cb);
    }
  }
  return out;
}

std::string JetPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [mono, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << polyneck::to_string(c);
    for (int j : mono) out << "*w" << j;
  }
  return out.str();
}

JetPolynomial jet_derive(const JetPolynomial& p) {
  JetPolynomial out;
  for (const auto& [mono, c] : p.terms()) {
    for (std::size_t i = 0; i < mono.size(); ++i) {
      // Repeated factors are visited once each, which produces the
      // multiplicity factor of the power rule.
      JetMonomial raised(mono);
      ++raised[i];
      out.add_term(std::move(raised), c);
    }
  }
  return out;
}

bool verify_identity_one(int n) {
  if (n < 1) throw InvalidParameter("identity one needs n >= 1");
  JetPolynomial antiderivative = JetPolynomial::product(n, n, sign(n + 1) * Rational(1, 2));
  for (int k = 1; k <= n - 1; ++k) antiderivative += JetPolynomial::product(k, 2 * n - k, sign(k + 1));
  return jet_derive(antiderivative) == JetPolynomial::product(2 * n, 1);
}

bool verify_identity_two(int n, int k) {
  if (n < 2 || k < 1 || k > n - 1)
    throw InvalidParameter("identity two needs n >= 2 and 1 <= k <= n-1");
  JetPolynomial inner;
  for (int l = 1; l <= n - k; ++l) inner += JetPolynomial::product(k + l - 1, 2 * n - k - l, sign(l - 1));
  const JetPolynomial rhs = jet_derive(inner) + JetPolynomial::product(n, n, sign(n - k));
  return rhs == JetPolynomial::product(k, 2 * n - k);
}

JetPolynomial radial_pohozaev_form(int m) {
  const auto poly = build_operator_polynomial(m);
  JetPolynomial squares;
  JetPolynomial boundary;
  for (int n = 1; n <= m; ++n) {
    const Rational a = radial_coefficient(poly, n);
    squares += JetPolynomial::product(n, n, a * sign(n + 1) * (Rational(n) - Rational(1, 2)));
    for (int k = 1; k <= n - 1; ++k)
      for (int l = 1; l <= n - k; ++l)
        boundary += JetPolynomial::product(k + l - 1, 2 * n - k - l, a * sign(k + l));
  }
  return squares + jet_derive(boundary);
}

JetPolynomial radial_antiderivative_direct(int m) {
  const auto poly = build_operator_polynomial(m);
  JetPolynomial out;
  for (int n = 1; n <= m; ++n) {
    const Rational a = radial_coefficient(poly, n);
    out += JetPolynomial::product(n, n, a * sign(n + 1) * Rational(1, 2));
    for (int k = 1; k <= n - 1; ++k) out += JetPolynomial::product(k, 2 * n - k, a * sign(k + 1));
  }
  return out;
}

JetPolynomial radial_pairing(int m) {
  const auto poly = build_operator_polynomial(m);
  JetPolynomial out;
  for (int n = 1; n <= m; ++n) out += JetPolynomial::product(2 * n, 1, radial_coefficient(poly, n));
  return out;
}

bool verify_radial_pohozaev(int m) { return jet_derive(radial_pohozaev_form(m)) == radial_pairing(m); }

}  // namespace polyneck
