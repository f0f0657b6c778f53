#include "polyneck/exp_integrals.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "polyneck/errors.hpp"

namespace polyneck {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Endpoint of [a, b] where alpha * t is maximal (0 when alpha = 0).
double peak_point(long alpha, double a, double b) {
  if (alpha > 0) return b;
  if (alpha < 0) return a;
  return 0.0;
}

// Integral of t^power e^{alpha (t - c)} over [a, b]; the integrand is
// bounded by max(|a|,|b|)^power because alpha (t - c) <= 0 there.
double shifted_integral(int power, long alpha, double c, double a, double b) {
  if (alpha == 0) return (std::pow(b, power + 1) - std::pow(a, power + 1)) / (power + 1);
  const double al = static_cast<double>(alpha);
  if (power == 0) {
    // (e^{alpha(b-c)} - e^{alpha(a-c)}) / alpha with one exponent equal to 0.
    return alpha > 0 ? -std::expm1(-al * (b - a)) / al : std::expm1(al * (b - a)) / al;
  }
  // Antiderivative e^{alpha(t-c)} sum_i (-1)^i power!/(power-i)! t^{power-i} / alpha^{i+1}.
  auto antiderivative = [&](double t) {
    double sum = 0.0;
    double falling = 1.0;
    double alpha_pow = al;
    for (int i = 0; i <= power; ++i) {
      sum += ((i % 2) ? -1.0 : 1.0) * falling * std::pow(t, power - i) / alpha_pow;
      falling *= power - i;
      alpha_pow *= al;
    }
    return std::exp(al * (t - c)) * sum;
  };
  return antiderivative(b) - antiderivative(a);
}

}  // namespace

double log_add(double x, double y) {
  if (x == kNegInf) return y;
  if (y == kNegInf) return x;
  const double hi = std::max(x, y);
  return hi + std::log1p(std::exp(std::min(x, y) - hi));
}

double log_exp_integral(long alpha, double a, double b) {
  if (!(a < b)) throw InvalidParameter("integration interval requires a < b");
  const double c = peak_point(alpha, a, b);
  return static_cast<double>(alpha) * c + std::log(shifted_integral(0, alpha, c, a, b));
}

double exp_integral(long alpha, double a, double b) { return std::exp(log_exp_integral(alpha, a, b)); }

double log_square_integral(std::span<const ExpPolyTerm> terms, double a, double b) {
  if (!(a < b)) throw InvalidParameter("integration interval requires a < b");
  std::vector<ExpPolyTerm> live;
  for (const auto& term : terms)
    if (term.coeff != 0.0) live.push_back(term);
  if (live.empty()) return kNegInf;

  // Each term j is rescaled by its own peak e^{s_j}, then all by the common
  // weight e^{top}: value = e^{2 top} sum_jk w_j w_k I'_jk.
  std::vector<double> peak(live.size());
  std::vector<double> log_weight(live.size());
  for (std::size_t j = 0; j < live.size(); ++j) {
    peak[j] = static_cast<double>(live[j].alpha) * peak_point(live[j].alpha, a, b);
    log_weight[j] = std::log(std::abs(live[j].coeff)) + peak[j];
  }
  const double top = *std::max_element(log_weight.begin(), log_weight.end());

  std::vector<double> w(live.size());
  for (std::size_t j = 0; j < live.size(); ++j)
    w[j] = std::copysign(std::exp(log_weight[j] - top), live[j].coeff);

  double sum = 0.0;
  for (std::size_t j = 0; j < live.size(); ++j) {
    for (std::size_t k = j; k < live.size(); ++k) {
      const long alpha = live[j].alpha + live[k].alpha;
      const int power = live[j].power + live[k].power;
      const double c = peak_point(alpha, a, b);
      const double reduced = std::exp(static_cast<double>(alpha) * c - peak[j] - peak[k]) *
                             shifted_integral(power, alpha, c, a, b);
      sum += (j == k ? 1.0 : 2.0) * w[j] * w[k] * reduced;
    }
  }
  if (!(sum > 0.0)) return kNegInf;
  return 2.0 * top + std::log(sum);
}

}  // namespace polyneck
