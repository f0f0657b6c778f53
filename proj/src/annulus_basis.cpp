#include "polyneck/annulus_basis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <string>

#include "polyneck/errors.hpp"
#include "polyneck/exp_integrals.hpp"
#include "polyneck/operator_poly.hpp"

namespace polyneck {

namespace {

Integer binomial(int top, int bottom) {
  if (bottom < 0 || top < 0 || bottom > top) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(top), static_cast<unsigned long>(bottom));
  return out;
}

using Exponents = std::vector<int>;

void enumerate_monomials(int vars, int degree, Exponents& current, std::vector<Exponents>& out) {
  const int used = static_cast<int>(current.size());
  if (used == vars - 1) {
    current.push_back(degree);
    out.push_back(current);
    current.pop_back();
    return;
  }
  for (int e = degree; e >= 0; --e) {
    current.push_back(e);
    enumerate_monomials(vars, degree - e, current, out);
    current.pop_back();
  }
}

std::vector<Exponents> monomials(int vars, int degree) {
  std::vector<Exponents> out;
  if (degree < 0) return out;
  Exponents current;
  enumerate_monomials(vars, degree, current, out);
  return out;
}

constexpr std::int64_t kPrime = 2147483647;  // 2^31 - 1

std::int64_t inverse_mod(std::int64_t a) {
  std::int64_t result = 1, base = a % kPrime, e = kPrime - 2;
  while (e) {
    if (e & 1) result = result * base % kPrime;
    base = base * base % kPrime;
    e >>= 1;
  }
  return result;
}

int rank_mod_prime(std::vector<std::vector<std::int64_t>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  int rank = 0;
  for (std::size_t col = 0; col < cols && rank < static_cast<int>(rows.size()); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    const std::int64_t inv = inverse_mod(rows[rank][col]);
    for (auto& x : rows[rank]) x = x * inv % kPrime;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == static_cast<std::size_t>(rank) || rows[r][col] == 0) continue;
      const std::int64_t factor = rows[r][col];
      for (std::size_t c = col; c < cols; ++c)
        rows[r][c] = ((rows[r][c] - factor * rows[rank][c]) % kPrime + kPrime) % kPrime;
    }
    ++rank;
  }
  return rank;
}

std::vector<ExpPolyTerm> field_terms(const AnnulusField& field, const ModeCoefficients& coeffs, int n) {
  std::vector<ExpPolyTerm> terms;
  for (int k = 1; k <= field.m; ++k) {
    const long nk = n + 2 * (k - 1);
    terms.push_back({0, nk, coeffs.c[k - 1]});
    terms.push_back({0, -nk, coeffs.d[k - 1]});
  }
  return terms;
}

std::vector<ExpPolyTerm> zero_mode_terms(const AnnulusField& field) {
  std::vector<ExpPolyTerm> terms{{0, 0, field.zero_mode.a0}, {1, 0, field.zero_mode.b0}};
  for (int k = 2; k <= field.m; ++k) {
    const long e = 2 * (k - 1);
    terms.push_back({0, e, field.zero_mode.c0[k - 2]});
    terms.push_back({0, -e, field.zero_mode.d0[k - 2]});
  }
  return terms;
}

}  // namespace

Integer harmonic_dimension(int m, int n) {
  if (m < 1 || n < 0) throw InvalidParameter("harmonic_dimension needs m >= 1 and n >= 0");
  return binomial(n + 2 * m - 1, n) - binomial(n + 2 * m - 3, n - 2);
}

Integer harmonic_dimension_brute_force(int m, int n) {
  if (m < 1 || n < 0) throw InvalidParameter("harmonic_dimension_brute_force needs m >= 1 and n >= 0");
  const int vars = 2 * m;
  const auto source = monomials(vars, n);
  const auto target = monomials(vars, n - 2);
  if (target.empty()) return static_cast<long>(source.size());

  std::map<Exponents, std::size_t> column_of;
  for (std::size_t j = 0; j < source.size(); ++j) column_of[source[j]] = j;
  std::map<Exponents, std::size_t> row_of;
  for (std::size_t i = 0; i < target.size(); ++i) row_of[target[i]] = i;

  // Laplacian x^e -> sum_i e_i (e_i - 1) x^{e - 2 u_i}.
  std::vector<std::vector<std::int64_t>> matrix(target.size(), std::vector<std::int64_t>(source.size(), 0));
  for (std::size_t j = 0; j < source.size(); ++j) {
    for (int i = 0; i < vars; ++i) {
      const int e = source[j][i];
      if (e < 2) continue;
      Exponents lowered = source[j];
      lowered[i] -= 2;
      matrix[row_of.at(lowered)][j] = (matrix[row_of.at(lowered)][j] + e * (e - 1)) % kPrime;
    }
  }
  const int rank = rank_mod_prime(std::move(matrix));
  return static_cast<long>(source.size()) - rank;
}

ModeSpectrum mode_spectrum(int m, int n) {
  if (m < 1) throw InvalidParameter("mode_spectrum needs m >= 1");
  if (n < 0) throw InvalidParameter("mode_spectrum needs n >= 0");
  ModeSpectrum spec;
  spec.m = m;
  spec.n = n;
  spec.mu = Integer(n) * Integer(n + 2 * m - 2);
  spec.multiplicity = harmonic_dimension(m, n);
  for (int k = 1; k <= m; ++k) spec.exponents.push_back(n + 2 * (k - 1));
  if (n <= 6 && m <= 3) {
    if (harmonic_dimension_brute_force(m, n) != spec.multiplicity)
      throw std::logic_error("harmonic dimension formula disagrees with brute force at m=" +
                             std::to_string(m) + ", n=" + std::to_string(n));
    spec.multiplicity_cross_checked = true;
  }
  return spec;
}

ModeAnnihilationReport verify_mode_annihilation(int m, int n) {
  if (n < 0) throw InvalidParameter("mode index n must be nonnegative");
  const auto poly = build_operator_polynomial(m);
  ModeAnnihilationReport report{m, n, true, {}, {}};
  if (n == 0) {
    // Radial symbol of degree 2m: a double root at 0 and simple roots +-2j
    // account for all 2m roots.
    const auto radial = radial_restriction(poly);
    const auto slope = derivative(radial);
    report.radial_roots = {0, 0};
    if (evaluate(radial, 0) != 0 || evaluate(slope, 0) != 0) report.passed = false;
    for (int j = 1; j < m; ++j) {
      for (int root : {2 * j, -2 * j}) {
        report.radial_roots.push_back(root);
        if (evaluate(radial, root) != 0) {
          report.passed = false;
          report.failures.push_back(root);
        }
      }
    }
    if (static_cast<int>(radial.size()) - 1 != static_cast<int>(report.radial_roots.size()))
      report.passed = false;
    std::sort(report.radial_roots.begin(), report.radial_roots.end());
    return report;
  }
  const auto spec = mode_spectrum(m, n);
  const Rational eig = -Rational(spec.mu);
  for (int nk : spec.exponents) {
    for (int lambda : {nk, -nk}) {
      if (evaluate_at_mode(poly, lambda, eig) != 0) {
        report.passed = false;
        report.failures.push_back(lambda);
      }
    }
  }
  return report;
}

bool ZeroMode::is_zero() const {
  auto zero = [](double x) { return x == 0.0; };
  return a0 == 0.0 && b0 == 0.0 && std::all_of(c0.begin(), c0.end(), zero) &&
         std::all_of(d0.begin(), d0.end(), zero);
}

bool AnnulusField::is_zero() const {
  if (!zero_mode.is_zero()) return false;
  for (const auto& [key, coeffs] : modes) {
    for (double x : coeffs.c)
      if (x != 0.0) return false;
    for (double x : coeffs.d)
      if (x != 0.0) return false;
  }
  return true;
}

void validate_field(const AnnulusField& field) {
  if (field.m < 1) throw InvalidParameter("field order m must be >= 1");
  const auto tail = static_cast<std::size_t>(field.m - 1);
  if ((!field.zero_mode.c0.empty() && field.zero_mode.c0.size() != tail) ||
      (!field.zero_mode.d0.empty() && field.zero_mode.d0.size() != tail))
    throw InvalidParameter("zero-mode C0/D0 must have m-1 entries");
  for (const auto& [key, coeffs] : field.modes) {
    const auto [n, l] = key;
    if (n < 1) throw InvalidParameter("nonzero modes need n >= 1");
    if (l < 1 || Integer(l) > harmonic_dimension(field.m, n))
      throw InvalidParameter("harmonic index l=" + std::to_string(l) + " outside 1..h_n for n=" +
                             std::to_string(n));
    if (coeffs.c.size() != static_cast<std::size_t>(field.m) ||
        coeffs.d.size() != static_cast<std::size_t>(field.m))
      throw InvalidParameter("mode coefficients C and D must have m entries");
  }
}

double interval_log_energy(const AnnulusField& field, double a, double b) {
  validate_field(field);
  if (!(a < b)) throw InvalidParameter("energy interval requires a < b");
  double total = -std::numeric_limits<double>::infinity();
  if (!field.zero_mode.is_zero()) {
    AnnulusField padded = field;
    padded.zero_mode.c0.resize(field.m - 1, 0.0);
    padded.zero_mode.d0.resize(field.m - 1, 0.0);
    total = log_add(total, log_square_integral(zero_mode_terms(padded), a, b));
  }
  // Orthonormality of the phi^l_n: no cross terms between distinct (n, l).
  for (const auto& [key, coeffs] : field.modes)
    total = log_add(total, log_square_integral(field_terms(field, coeffs, key.first), a, b));
  return total;
}

double interval_energy(const AnnulusField& field, double a, double b) {
  return std::exp(interval_log_energy(field, a, b));
}

double annulus_log_energy(const AnnulusField& field, int i, double gap) {
  if (!(gap > 0.0)) throw InvalidParameter("annulus gap L must be positive");
  if (i < 1) throw InvalidParameter("annulus index i must be >= 1");
  return interval_log_energy(field, -i * gap, -(i - 1) * gap);
}

double annulus_energy(const AnnulusField& field, int i, double gap) {
  return std::exp(annulus_log_energy(field, i, gap));
}

}  // namespace polyneck
