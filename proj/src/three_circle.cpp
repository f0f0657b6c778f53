#include "polyneck/three_circle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "polyneck/errors.hpp"
#include "polyneck/exp_integrals.hpp"
#include "polyneck/linalg.hpp"

namespace polyneck {

double IntervalGram::entry(Eigen::Index j, Eigen::Index k) const { return std::exp(log_entries(j, k)); }

Eigen::MatrixXd IntervalGram::entries() const { return log_entries.array().exp().matrix(); }

IntervalGram interval_gram(std::span<const int> exponents, double a, double b) {
  if (!(a < b)) throw InvalidParameter("interval_gram requires a < b");
  const auto size = static_cast<Eigen::Index>(exponents.size());
  IntervalGram gram{{exponents.begin(), exponents.end()}, a, b, Eigen::MatrixXd(size, size)};
  for (Eigen::Index j = 0; j < size; ++j)
    for (Eigen::Index k = j; k < size; ++k)
      gram.log_entries(j, k) = gram.log_entries(k, j) =
          log_exp_integral(static_cast<long>(exponents[j]) + exponents[k], a, b);
  return gram;
}

std::vector<int> mode_exponents(int m, int n) {
  std::vector<int> out;
  for (int k = 1; k <= m; ++k) out.push_back(n + 2 * (k - 1));
  for (int k = 1; k <= m; ++k) out.push_back(-(n + 2 * (k - 1)));
  return out;
}

namespace {

void check_mode(int m, int n, double gap) {
  if (m < 1) throw InvalidParameter("three-circle order m must be >= 1");
  if (n < 1) throw PreconditionError("zero-average fields have no n = 0 mode; need n >= 1");
  if (!(gap > 0.0)) throw InvalidParameter("gap L must be positive");
}

}  // namespace

Eigen::MatrixXd ThreeCircleForm::raw() const {
  return std::exp(-gap) * (left.entries() + right.entries()) - 2.0 * center.entries();
}

ThreeCircleForm three_circle_form(int m, int n, double gap, Placement placement) {
  check_mode(m, n, gap);
  const auto exps = mode_exponents(m, n);
  ThreeCircleForm form;
  form.m = m;
  form.n = n;
  form.gap = gap;
  form.placement = placement;
  const double lo = placement == Placement::Symmetric ? -gap / 2 : -gap;
  const double hi = lo + gap;
  form.center = interval_gram(exps, lo, hi);
  form.left = interval_gram(exps, lo - gap, hi - gap);
  form.right = interval_gram(exps, lo + gap, hi + gap);

  const Eigen::Index size = static_cast<Eigen::Index>(exps.size());
  const double log2 = std::log(2.0);
  auto log_rhs = [&](Eigen::Index j, Eigen::Index k) {
    return -gap + log_add(form.left.log_entries(j, k), form.right.log_entries(j, k));
  };
  auto log_lhs = [&](Eigen::Index j, Eigen::Index k) { return log2 + form.center.log_entries(j, k); };

  form.log_normalizer.resize(size);
  for (Eigen::Index j = 0; j < size; ++j)
    form.log_normalizer(j) = -0.5 * log_add(log_rhs(j, j), log_lhs(j, j));

  form.rhs.resize(size, size);
  form.lhs.resize(size, size);
  for (Eigen::Index j = 0; j < size; ++j) {
    for (Eigen::Index k = 0; k < size; ++k) {
      const double shift = form.log_normalizer(j) + form.log_normalizer(k);
      form.rhs(j, k) = std::exp(log_rhs(j, k) + shift);
      form.lhs(j, k) = std::exp(log_lhs(j, k) + shift);
    }
  }
  return form;
}

ThreeCircleCertificate three_circle_certificate(int m, int n, double gap, Placement placement) {
  const auto form = three_circle_form(m, n, gap, placement);
  ThreeCircleCertificate cert{m, n, gap, 0.0, 0.0, false};
  cert.margin = smallest_eigenvalue(form.normalized());
  cert.threshold = kMarginRelativeThreshold * (form.rhs + form.lhs).trace();
  cert.certified = cert.margin > cert.threshold;
  return cert;
}

double min_L(int m, int n, double tol, double cap) {
  check_mode(m, n, cap);
  if (!(tol > 0.0)) throw InvalidParameter("min_L tolerance must be positive");
  const int steps = static_cast<int>(std::floor(cap / kGapGridStep + 1e-9));
  if (steps < 1) throw InvalidParameter("gap cap is below the grid step");

  bool previous = false;  // L = 0: D vanishes identically
  int last_rise = -1;
  bool certified = false;
  for (int i = 1; i <= steps; ++i) {
    certified = three_circle_certificate(m, n, i * kGapGridStep).certified;
    if (certified && !previous) last_rise = i;
    previous = certified;
  }
  if (!certified || last_rise < 0)
    throw SearchFailure("no certified gap found for m=" + std::to_string(m) + ", n=" + std::to_string(n) +
                        " below L=" + std::to_string(cap));

  double lo = (last_rise - 1) * kGapGridStep;
  double hi = last_rise * kGapGridStep;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (three_circle_certificate(m, n, mid).certified)
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

UniformLReport uniform_L_report(int m, int n_max, double tol, double cap) {
  if (n_max < 1) throw InvalidParameter("n_max must be >= 1");
  UniformLReport report;
  report.m = m;
  report.n_max = n_max;
  for (int n = 1; n <= n_max; ++n) report.min_gap.push_back(min_L(m, n, tol, cap));

  const auto peak = std::max_element(report.min_gap.begin(), report.min_gap.end());
  report.L_star = *peak;
  report.peak_n = static_cast<int>(peak - report.min_gap.begin()) + 1;
  report.nonincreasing_beyond_peak =
      std::is_sorted(peak, report.min_gap.end(), [](double x, double y) { return x > y; });

  report.all_certified = true;
  for (int n = 1; n <= n_max; ++n) {
    const auto cert = three_circle_certificate(m, n, report.L_star);
    report.margin_at_Lstar.push_back(cert.margin);
    report.threshold_at_Lstar.push_back(cert.threshold);
    report.all_certified = report.all_certified && cert.certified;
  }
  return report;
}

AnnulusField random_zero_average_field(int m, int n_cap, Rng& rng) {
  if (n_cap < 1) throw InvalidParameter("n_cap must be >= 1");
  AnnulusField field;
  field.m = m;
  const int count = rng.uniform_int(1, 5);
  for (int i = 0; i < count; ++i) {
    const int n = rng.uniform_int(1, n_cap);
    const Integer h = harmonic_dimension(m, n);
    const int l_cap = h > 1000 ? 1000 : static_cast<int>(h.get_si());
    const int l = rng.uniform_int(1, l_cap);
    ModeCoefficients coeffs;
    for (int k = 0; k < m; ++k) coeffs.c.push_back(rng.normal());
    for (int k = 0; k < m; ++k) coeffs.d.push_back(rng.normal());
    field.modes.insert_or_assign({n, l}, std::move(coeffs));
  }
  return field;
}

double three_circle_ratio(const AnnulusField& field, double gap) {
  if (!(gap > 0.0)) throw InvalidParameter("gap L must be positive");
  const double f1 = interval_log_energy(field, -gap, 0.0);
  if (f1 == -std::numeric_limits<double>::infinity()) return std::numeric_limits<double>::quiet_NaN();
  const double f0 = interval_log_energy(field, 0.0, gap);
  const double f2 = interval_log_energy(field, -2.0 * gap, -gap);
  return std::exp(std::log(2.0) + f1 - (-gap + log_add(f0, f2)));
}

RandomFieldReport random_field_check(int m, double gap, int trials, std::uint64_t seed, int n_cap) {
  if (trials < 0) throw InvalidParameter("trials must be nonnegative");
  RandomFieldReport report;
  report.trials = trials;
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    const auto field = random_zero_average_field(m, n_cap, rng);
    const double ratio = three_circle_ratio(field, gap);
    if (std::isnan(ratio)) {
      ++report.skipped;
      continue;
    }
    ++report.checked;
    report.worst_ratio = std::max(report.worst_ratio, ratio);
    if (!(ratio < 1.0)) report.passed = false;
  }
  return report;
}

}  // namespace polyneck
