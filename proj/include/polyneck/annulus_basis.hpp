#pragma once

// Separated solutions of Delta^m u = 0 on annuli of R^{2m}.
//
// In cylinder coordinates every m-polyharmonic u on an annulus is
//
//   u = A0 + B0 t + sum_{k=2}^m (C0_k e^{2(k-1)t} + D0_k e^{-2(k-1)t})
//     + sum_{n>=1} sum_{l=1}^{h_n} sum_{k=1}^m (C^l_{n,k} e^{n_k t} + D^l_{n,k} e^{-n_k t}) phi^l_n
//
// with n_k = n + 2(k-1) and phi^l_n an orthonormal basis of spherical
// harmonics of degree n (eigenvalue -n(n+2m-2)). The zero-mode coefficients
// are taken against the normalized constant harmonic. Spherical harmonics are
// never evaluated pointwise: energies only use their orthonormality.

#include <map>
#include <utility>
#include <vector>

#include "polyneck/exact.hpp"

namespace polyneck {

struct ModeSpectrum {
  int m = 0;
  int n = 0;
  Integer mu;            ///< n(n+2m-2)
  Integer multiplicity;  ///< h_n
  std::vector<int> exponents;  ///< n_k = n + 2(k-1), k = 1..m
  bool multiplicity_cross_checked = false;
};

/// C(n+2m-1, n) - C(n+2m-3, n-2).
Integer harmonic_dimension(int m, int n);

/// Dimension of the kernel of the Laplacian on homogeneous degree-n
/// polynomials in 2m variables, by explicit rank computation modulo a prime.
/// The modular rank never exceeds the rational one; since the Laplacian is
/// onto, hitting the full row count proves the rational rank. Intended for
/// small (m, n).
Integer harmonic_dimension_brute_force(int m, int n);

/// Cross-checks h_n by brute force when n <= 6 and m <= 3.
ModeSpectrum mode_spectrum(int m, int n);

struct ModeAnnihilationReport {
  int m = 0;
  int n = 0;
  bool passed = true;
  /// Signed exponents +-n_k where P_m(+-n_k, -mu_n) != 0.
  std::vector<int> failures;
  /// n = 0 only: roots {0 (double), +-2, ..., +-2(m-1)} of the radial symbol.
  std::vector<int> radial_roots;
};

ModeAnnihilationReport verify_mode_annihilation(int m, int n);

struct ModeCoefficients {
  std::vector<double> c;  ///< growing exponentials e^{n_k t}, k = 1..m
  std::vector<double> d;  ///< decaying exponentials e^{-n_k t}
};

struct ZeroMode {
  double a0 = 0.0;
  double b0 = 0.0;
  std::vector<double> c0;  ///< k = 2..m
  std::vector<double> d0;

  bool is_zero() const;
};

struct AnnulusField {
  int m = 1;
  ZeroMode zero_mode;
  std::map<std::pair<int, int>, ModeCoefficients> modes;  ///< keyed by (n, l)

  bool zero_average() const { return zero_mode.is_zero(); }
  bool is_zero() const;
};

/// Throws InvalidParameter on wrong coefficient lengths, n < 1, or
/// l outside 1..h_n.
void validate_field(const AnnulusField& field);

/// log of the integral over [a, b] of the squared L^2(S^{2m-1}) norm of u.
double interval_log_energy(const AnnulusField& field, double a, double b);
double interval_energy(const AnnulusField& field, double a, double b);

/// F_i(u) = int_{A_i} u^2 / |x|^{2m}, A_i = {e^{-iL} < |x| < e^{-(i-1)L}},
/// i.e. the energy over t in [-iL, -(i-1)L]. Throws InvalidParameter for
/// L <= 0 or i < 1.
double annulus_log_energy(const AnnulusField& field, int i, double gap);
double annulus_energy(const AnnulusField& field, int i, double gap);

}  // namespace polyneck
