#pragma once

// Commutative jet algebra Q[w_0, w_1, ...] with the derivation D: w_j -> w_{j+1}.
// w_j stands for the j-th t-derivative of a scalar function w. The
// integration-by-parts identities used for the radial Pohozaev form are
// bilinear and symmetric, so checking them for scalar w covers the
// vector-valued (dot product) case.

#include <map>
#include <string>
#include <vector>

#include "polyneck/exact.hpp"

namespace polyneck {

/// Product w_{j1} w_{j2} ... with j1 <= j2 <= ...; the empty product is 1.
using JetMonomial = std::vector<int>;

class JetPolynomial {
 public:
  JetPolynomial() = default;
  static JetPolynomial constant(const Rational& c);
  /// c * w_j.
  static JetPolynomial generator(int j, const Rational& c = 1);
  /// c * w_i w_j.
  static JetPolynomial product(int i, int j, const Rational& c = 1);

  const std::map<JetMonomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(JetMonomial monomial, const Rational& c);

  JetPolynomial& operator+=(const JetPolynomial& other);
  JetPolynomial& operator-=(const JetPolynomial& other);
  JetPolynomial& operator*=(const Rational& c);
  friend JetPolynomial operator+(JetPolynomial a, const JetPolynomial& b) { return a += b; }
  friend JetPolynomial operator-(JetPolynomial a, const JetPolynomial& b) { return a -= b; }
  friend JetPolynomial operator*(JetPolynomial a, const Rational& c) { return a *= c; }
  friend JetPolynomial operator*(const JetPolynomial& a, const JetPolynomial& b);
  friend bool operator==(const JetPolynomial&, const JetPolynomial&) = default;

  std::string to_string() const;

 private:
  std::map<JetMonomial, Rational> terms_;
};

/// Leibniz-rule derivative.
JetPolynomial jet_derive(const JetPolynomial& p);

/// w_{2n} w_1 = D((-1)^{n+1} w_n^2 / 2 + sum_{k=1}^{n-1} (-1)^{k+1} w_k w_{2n-k}).
bool verify_identity_one(int n);

/// w_k w_{2n-k} = D(sum_{l=1}^{n-k} (-1)^{l-1} w_{k+l-1} w_{2n-k-l}) + (-1)^{n-k} w_n^2.
/// Throws InvalidParameter unless n >= 2 and 1 <= k <= n-1.
bool verify_identity_two(int n, int k);

/// Radial Pohozaev form built from the coefficients a_{2n,0} of P_m:
///   sum_n a_{2n,0} (-1)^{n+1} (n - 1/2) w_n^2
///   + D(sum_n sum_{k=1}^{n-1} sum_{l=1}^{n-k} (-1)^{k+l} a_{2n,0} w_{k+l-1} w_{2n-k-l}).
JetPolynomial radial_pohozaev_form(int m);

/// Antiderivative assembled from the first identity alone:
///   sum_n a_{2n,0} ((-1)^{n+1} w_n^2 / 2 + sum_{k=1}^{n-1} (-1)^{k+1} w_k w_{2n-k}).
JetPolynomial radial_antiderivative_direct(int m);

/// sum_n a_{2n,0} w_{2n} w_1, the radial slice of P(d/dt, Delta_S) w . d/dt w.
JetPolynomial radial_pairing(int m);

/// D(radial_pohozaev_form(m)) == radial_pairing(m).
bool verify_radial_pohozaev(int m);

}  // namespace polyneck
