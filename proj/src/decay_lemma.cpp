#include "polyneck/decay_lemma.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "polyneck/errors.hpp"
#include "polyneck/random.hpp"

namespace polyneck {

namespace {

constexpr double kTol = kHypothesisTolerance;

double theta_cap(const DecayProblem& p, int n) {
  return p.C2 * p.scale * std::exp(-p.sigma * (p.n0 - n));
}

}  // namespace

HypothesisReport check_hypotheses(const DecayProblem& p) {
  if (p.n0 < 1) throw InvalidParameter("n0 must be >= 1");
  const auto expected = static_cast<std::size_t>(p.n0) + 1;
  if (p.F.size() != expected || p.Theta.size() != expected)
    throw InvalidParameter("F and Theta must have n0 + 1 entries");

  HypothesisReport report;
  auto fail = [&](bool& flag, std::optional<int>* where, int index, const std::string& what) {
    if (where && !*where) *where = index;
    if (flag) {
      std::ostringstream msg;
      msg << what << " fails at index " << index;
      report.messages.push_back(msg.str());
    }
    flag = false;
    report.passed = false;
  };

  if (!(p.C1 > 0 && p.C2 > 0 && p.sigma > 0 && p.scale >= 0 && p.endpoint_bound >= 0)) {
    report.parameters_ok = false;
    report.passed = false;
    report.messages.push_back("constants must satisfy C1, C2, sigma > 0 and scale, endpoint_bound >= 0");
  }
  for (int n = 0; n <= p.n0; ++n) {
    if (!(p.F[n] >= 0) || !(p.Theta[n] >= 0)) {
      report.parameters_ok = false;
      report.passed = false;
      report.messages.push_back("F and Theta must be nonnegative (index " + std::to_string(n) + ")");
      break;
    }
  }
  for (int n = 1; n <= p.n0; ++n)
    if (p.F[n] < p.F[n - 1] - kTol) fail(report.monotone, &report.monotone_index, n, "monotonicity");
  for (int n = 0; n <= p.n0; ++n)
    if (p.Theta[n] > theta_cap(p, n) + kTol) fail(report.theta_bound, &report.theta_index, n, "Theta bound");
  for (int n = 1; n <= p.n0 - 1; ++n)
    if (p.F[n] > p.Theta[n] + p.C1 * (p.F[n + 1] - p.F[n - 1]) + kTol)
      fail(report.iteration, &report.iteration_index, n, "difference inequality");
  if (p.F[p.n0] > p.endpoint_bound * p.scale + kTol) fail(report.endpoint, nullptr, p.n0, "endpoint bound");
  return report;
}

double decay_rate_from_iteration(double c1) {
  if (!(c1 > 0)) throw InvalidParameter("C1 must be positive");
  return -0.5 * std::log(2.0 * c1 / (2.0 * c1 + 1.0));
}

std::vector<bool> bad_set(const DecayProblem& p) {
  std::vector<bool> in_bad(static_cast<std::size_t>(p.n0) + 1, false);
  for (int n = 1; n <= p.n0 - 1; ++n) in_bad[n] = p.C1 * (p.F[n + 1] - p.F[n - 1]) > p.Theta[n];
  return in_bad;
}

DecayCertificate certify_decay(const DecayProblem& p) {
  const auto hypotheses = check_hypotheses(p);
  if (!hypotheses.passed) {
    std::string why = "decay hypotheses fail";
    if (!hypotheses.messages.empty()) why += ": " + hypotheses.messages.front();
    throw PreconditionError(why);
  }

  DecayCertificate cert;
  cert.sigma_prime = decay_rate_from_iteration(p.C1);
  cert.sigma_tilde = std::min(p.sigma, cert.sigma_prime);
  const double st = cert.sigma_tilde;
  const auto in_bad = bad_set(p);
  const int n0 = p.n0;

  // Proof constant for F_{n1}: F_{n1} <= K s e^{-sigma (n0 - n1)}.
  auto anchor_factor = [&](int n1) { return n1 == n0 ? p.endpoint_bound : 2.0 * p.C2; };
  // Converts F_n <= K s e^{-decay} into the constant in front of s e^{-st (n0 - n)}.
  auto normalized = [&](double factor, double decay, int n) { return factor * std::exp(st * (n0 - n) - decay); };

  cert.bounds.resize(static_cast<std::size_t>(n0) + 1);
  for (int n = 0; n <= n0; ++n) {
    IndexBound& bound = cert.bounds[n];
    if (n == n0) {
      bound = {DecayBranch::Endpoint, n0, 0, p.endpoint_bound};
      cert.c_prime_branch = std::max(cert.c_prime_branch, p.endpoint_bound);
      continue;
    }
    if (n >= 1 && !in_bad[n]) {
      bound = {DecayBranch::Good, n, 0, normalized(2.0 * p.C2, p.sigma * (n0 - n), n)};
      cert.c_prime_branch = std::max(cert.c_prime_branch, 2.0 * p.C2);
      continue;
    }
    // n in B (or n = 0): n1 is the next index of B', or n0.
    int n1 = n + 1;
    while (n1 < n0 && in_bad[n1]) ++n1;
    const double factor = anchor_factor(n1);
    if (n1 == n + 1) {
      bound = {DecayBranch::Adjacent, n1, 0, normalized(factor, p.sigma * (n0 - n1), n)};
      cert.c_prime_branch = std::max(cert.c_prime_branch, factor * std::exp(st));
      continue;
    }
    // Largest odd l with n + l < n1; then n + l + 1 <= n1 <= n + l + 2.
    int l = n1 - n - 1;
    if (l % 2 == 0) --l;
    const double decay = cert.sigma_prime * (l + 1) + p.sigma * (n0 - n1);
    bound = {DecayBranch::Chain, n1, l, normalized(factor, decay, n)};
    cert.c_prime_branch = std::max(cert.c_prime_branch, factor * std::exp(cert.sigma_prime));
  }

  for (const auto& bound : cert.bounds) cert.c_prime = std::max(cert.c_prime, bound.constant);

  cert.verified = true;
  for (int n = 0; n <= n0; ++n) {
    const double envelope = cert.c_prime * p.scale * std::exp(-st * (n0 - n));
    if (p.F[n] > envelope * (1.0 + 1e-12) + kTol) cert.verified = false;
  }
  return cert;
}

DecayProblem generate_admissible(int n0, double c1, double c2, double sigma, double scale,
                                 std::uint64_t seed) {
  if (n0 < 1) throw InvalidParameter("n0 must be >= 1");
  if (!(c1 > 0 && c2 > 0 && sigma > 0 && scale >= 0))
    throw InvalidParameter("generate_admissible needs C1, C2, sigma > 0 and scale >= 0");

  Rng rng(seed);
  DecayProblem p;
  p.n0 = n0;
  p.C1 = c1;
  p.C2 = c2;
  p.sigma = sigma;
  p.scale = scale;
  p.endpoint_bound = 2.0 * c2;
  p.F.assign(static_cast<std::size_t>(n0) + 1, 0.0);
  p.Theta.assign(static_cast<std::size_t>(n0) + 1, 0.0);
  if (scale == 0.0) return p;

  for (int n = 0; n <= n0; ++n) p.Theta[n] = rng.uniform() * theta_cap(p, n);

  // Fractions are biased towards the upper bound so that long runs of B occur.
  auto fraction = [&] { return rng.uniform() < 0.5 ? rng.uniform(0.9, 0.999) : rng.uniform(0.0, 0.999); };

  p.F[n0] = fraction() * p.endpoint_bound * scale;
  for (int n = n0; n >= 1; --n) {
    // Upper limit for F_{n-1}: monotone, the inequality at n, and
    // feasibility of the inequality at n-1 (F_{n-1} <= Theta_{n-1} + C1 F_n).
    double upper = p.F[n];
    if (n <= n0 - 1) upper = std::min(upper, p.F[n + 1] - (p.F[n] - p.Theta[n]) / c1);
    if (n - 1 >= 1) upper = std::min(upper, p.Theta[n - 1] + c1 * p.F[n]);
    if (upper < 0.0) {
      if (upper < -kTol) throw GenerationError("admissible instance construction failed at index " + std::to_string(n));
      upper = 0.0;
    }
    p.F[n - 1] = fraction() * upper;
  }
  return p;
}

}  // namespace polyneck
