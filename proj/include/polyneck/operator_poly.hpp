#pragma once

// Symbol of Delta^m in cylinder coordinates.
//
// With t = log|x| and theta on the unit sphere S^{2m-1} in R^{2m},
//
//     Delta^m u = e^{-2mt} P_m(d/dt, Delta_S) u,
//
// where P_m is a polynomial with integer coefficients in the two commuting
// symbols T = d/dt and S = Delta_S. P_m is built from P_0 = 1 by
//
//     P_{l+1} = (T^2 + S - 4l(m-1-l) + 2(m-1-2l) T) P_l,   l = 0..m-1,
//
// where the constants depend on the fixed target m.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polyneck/exact.hpp"

namespace polyneck {

inline constexpr int kDefaultMaxOrder = 12;

/// Exponent pair (p, q) of the monomial T^p S^q.
struct Monomial {
  int p = 0;
  int q = 0;
  auto operator<=>(const Monomial&) const = default;
};

/// Integer polynomial in T and S. Zero coefficients are never stored, so
/// structural equality of the maps is polynomial equality.
class SymbolPolynomial {
 public:
  SymbolPolynomial() = default;
  static SymbolPolynomial constant(const Integer& c);
  static SymbolPolynomial monomial(int p, int q, const Integer& c = 1);

  const std::map<Monomial, Integer>& terms() const { return terms_; }
  Integer coefficient(int p, int q) const;
  bool is_zero() const { return terms_.empty(); }

  void add_term(int p, int q, const Integer& c);

  SymbolPolynomial& operator+=(const SymbolPolynomial& other);
  friend SymbolPolynomial operator+(SymbolPolynomial a, const SymbolPolynomial& b) { return a += b; }
  friend SymbolPolynomial operator*(const SymbolPolynomial& a, const SymbolPolynomial& b);
  friend bool operator==(const SymbolPolynomial&, const SymbolPolynomial&) = default;

  /// Substitute T -> t, S -> s.
  Rational evaluate(const Rational& t, const Rational& s) const;

 private:
  std::map<Monomial, Integer> terms_;
};

/// P_m together with its order m.
struct OperatorPolynomial {
  int m = 0;
  SymbolPolynomial coeffs;
};

/// Univariate integer polynomial; coefficient i multiplies X^i. Trailing zeros
/// are trimmed.
using UnivariatePolynomial = std::vector<Integer>;

/// The recursion factor T^2 + S - 4l(m-1-l) + 2(m-1-2l) T.
SymbolPolynomial recursion_factor(int m, int l);

/// One recursion step P_l -> P_{l+1} for target order m.
SymbolPolynomial recursion_step(int m, int l, const SymbolPolynomial& previous);

/// P_0, P_1, ..., P_m for target order m (P_0 = 1).
std::vector<SymbolPolynomial> intermediate_polynomials(int m, int max_order = kDefaultMaxOrder);

/// Throws InvalidParameter unless 1 <= m <= max_order.
OperatorPolynomial build_operator_polynomial(int m, int max_order = kDefaultMaxOrder);

/// sum_p a_{p,0} X^p.
UnivariatePolynomial radial_restriction(const OperatorPolynomial& poly);

/// X^2 prod_{j=1}^{m-1} (X^2 - (2j)^2), expanded independently of the recursion.
UnivariatePolynomial radial_factorization(int m);

/// sum a_{p,q} lambda^p eig^q, exactly.
Rational evaluate_at_mode(const OperatorPolynomial& poly, const Rational& lambda,
                          const Rational& eig);

/// prod_{j=0}^{m-1} ((lambda-2j)(lambda-2j+2m-2) - mu): m-fold application of
/// Delta(r^a phi) = (a(a+2m-2) - mu) r^{a-2} phi for a spherical eigenfunction
/// phi with -Delta_S phi = mu phi.
Rational laplacian_mode_oracle(int m, const Rational& lambda, const Rational& mu);

struct StructureReport {
  bool no_odd_p = true;
  bool signs = true;
  bool factorization = true;
  /// First coefficient that broke a check, if any.
  std::optional<Monomial> offending;
  std::optional<Integer> offending_value;

  bool all_passed() const { return no_odd_p && signs && factorization; }
};

StructureReport verify_structure(const OperatorPolynomial& poly);

Rational evaluate(const UnivariatePolynomial& poly, const Rational& x);
UnivariatePolynomial derivative(const UnivariatePolynomial& poly);

}  // namespace polyneck
