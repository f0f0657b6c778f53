#pragma once

// Per-mode certification of the three-circle inequality
//
//     2 F_i(u) < e^{-L} (F_{i-1}(u) + F_{i+1}(u))
//
// for zero-average m-polyharmonic u. Energies separate over spherical modes,
// so for a fixed mode n it suffices that the quadratic form
//
//     D(L, n) = e^{-L} (S_left + S_right) - 2 S_center
//
// is positive definite, where S_I is the Gram matrix of the 2m exponentials
// e^{+-n_k t} over interval I. Intervals are [-L/2, L/2] for the center and
// its neighbours shifted by -+L (symmetric placement), or [-L, 0], [-2L, -L],
// [0, L] (shifted placement, the annuli A_1, A_2, A_0 themselves).

#include <Eigen/Dense>
#include <cstdint>
#include <span>
#include <vector>

#include "polyneck/annulus_basis.hpp"
#include "polyneck/random.hpp"

namespace polyneck {

inline constexpr double kDefaultGapCap = 50.0;
inline constexpr double kGapGridStep = 0.25;
inline constexpr double kMarginRelativeThreshold = 1e-9;

/// Gram matrix S_jk = integral over [a, b] of e^{(l_j + l_k) t}, stored as
/// log S_jk (every entry is positive) so that it never overflows.
struct IntervalGram {
  std::vector<int> exponents;
  double a = 0.0;
  double b = 0.0;
  Eigen::MatrixXd log_entries;

  double entry(Eigen::Index j, Eigen::Index k) const;
  /// exp(log_entries); may overflow for large |exponent| * interval.
  Eigen::MatrixXd entries() const;
};

/// Throws InvalidParameter unless a < b.
IntervalGram interval_gram(std::span<const int> exponents, double a, double b);

/// (n_1, ..., n_m, -n_1, ..., -n_m): coefficient order (A_1..A_m, B_1..B_m).
std::vector<int> mode_exponents(int m, int n);

enum class Placement { Symmetric, Shifted };

/// The three Gram matrices for one mode and their common diagonal
/// normalization. With T = e^{-L}(S_left + S_right) + 2 S_center (a sum of
/// Gram matrices, hence PSD) and Lambda = diag(T)^{-1/2}, the normalized
/// parts Lambda X Lambda have entries in [-1, 1]; Lambda D Lambda is
/// congruent to D and so has the same inertia.
struct ThreeCircleForm {
  int m = 0;
  int n = 0;
  double gap = 0.0;
  Placement placement = Placement::Symmetric;
  IntervalGram center;
  IntervalGram left;
  IntervalGram right;
  Eigen::VectorXd log_normalizer;  ///< log Lambda_jj
  Eigen::MatrixXd rhs;             ///< Lambda e^{-L}(S_left + S_right) Lambda
  Eigen::MatrixXd lhs;             ///< Lambda 2 S_center Lambda

  Eigen::MatrixXd normalized() const { return rhs - lhs; }
  /// Unnormalized D(L, n); may overflow for large n L.
  Eigen::MatrixXd raw() const;
};

ThreeCircleForm three_circle_form(int m, int n, double gap, Placement placement = Placement::Symmetric);

struct ThreeCircleCertificate {
  int m = 0;
  int n = 0;
  double gap = 0.0;
  double margin = 0.0;     ///< smallest eigenvalue of Lambda D Lambda
  double threshold = 0.0;  ///< 1e-9 * trace(Lambda T Lambda)
  bool certified = false;
};

/// Throws PreconditionError for n < 1 and InvalidParameter for L <= 0.
ThreeCircleCertificate three_circle_certificate(int m, int n, double gap,
                                                Placement placement = Placement::Symmetric);

/// Smallest certified gap: scans L = 0.25, 0.5, ..., cap (L = 0 counts as
/// uncertified), takes the last uncertified -> certified transition and
/// bisects it down to width tol. The returned L is certified; L - tol is not.
/// Throws SearchFailure if the cap itself is not certified.
double min_L(int m, int n, double tol = 1e-3, double cap = kDefaultGapCap);

struct UniformLReport {
  int m = 0;
  int n_max = 0;
  std::vector<double> min_gap;           ///< index n-1
  std::vector<double> margin_at_Lstar;   ///< index n-1
  std::vector<double> threshold_at_Lstar;
  double L_star = 0.0;
  int peak_n = 1;
  bool all_certified = false;
  bool nonincreasing_beyond_peak = false;
};

UniformLReport uniform_L_report(int m, int n_max, double tol = 1e-3, double cap = kDefaultGapCap);

/// Random zero-average field: 1..5 modes, n uniform in 1..n_cap, l uniform in
/// 1..min(h_n, 1000), standard normal coefficients.
AnnulusField random_zero_average_field(int m, int n_cap, Rng& rng);

/// 2F_1 / (e^{-L}(F_0 + F_2)) with F_0 the energy over [0, L]; NaN for the
/// zero field.
double three_circle_ratio(const AnnulusField& field, double gap);

struct RandomFieldReport {
  int trials = 0;
  int checked = 0;
  int skipped = 0;
  double worst_ratio = 0.0;
  bool passed = true;
};

RandomFieldReport random_field_check(int m, double gap, int trials, std::uint64_t seed, int n_cap = 20);

}  // namespace polyneck
