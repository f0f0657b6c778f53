#pragma once

// Discrete exponential decay from the difference inequality
//
//     F_n <= Theta_n + C1 (F_{n+1} - F_{n-1}),      1 <= n <= n0 - 1,
//     Theta_n <= C2 s e^{-sigma (n0 - n)},           0 <= n <= n0,
//
// with F nondecreasing and F_{n0} <= E s (s plays the role of eps^{1/m}).
// The certificate replays the constructive argument index by index: on
// B' = {n : C1 (F_{n+1} - F_{n-1}) <= Theta_n} one has F_n <= 2 Theta_n; on
// runs of B the inequality gives F_n <= r F_{n+2} with r = 2C1/(2C1+1), so
// F decays by e^{-sigma'} per step, sigma' = -log(r)/2, until the next
// index of B' (or n0).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace polyneck {

struct DecayProblem {
  int n0 = 1;
  std::vector<double> F;      ///< indices 0..n0
  std::vector<double> Theta;  ///< indices 0..n0
  double C1 = 1.0;
  double C2 = 1.0;
  double sigma = 1.0;
  double scale = 1.0;
  double endpoint_bound = 0.0;
};

inline constexpr double kHypothesisTolerance = 1e-12;

struct HypothesisReport {
  bool passed = true;
  bool parameters_ok = true;
  bool monotone = true;
  bool theta_bound = true;
  bool iteration = true;
  bool endpoint = true;
  /// First failing index for each check.
  std::optional<int> monotone_index;
  std::optional<int> theta_index;
  std::optional<int> iteration_index;
  std::vector<std::string> messages;
};

/// Throws InvalidParameter when F or Theta do not have n0 + 1 entries.
HypothesisReport check_hypotheses(const DecayProblem& p);

/// -log(2C1 / (2C1 + 1)) / 2.
double decay_rate_from_iteration(double c1);

enum class DecayBranch {
  Endpoint,  ///< n = n0: F_{n0} <= E s
  Good,      ///< n in B': F_n <= 2 Theta_n
  Adjacent,  ///< n + 1 = n1: F_n <= F_{n1}
  Chain,     ///< F_n <= r^{(l+1)/2} F_{n+l+1} <= r^{(l+1)/2} F_{n1}
};

struct IndexBound {
  DecayBranch branch = DecayBranch::Good;
  int anchor = 0;           ///< n1, the index whose bound is propagated
  int chain_length = 0;     ///< l (odd) for Chain
  double constant = 0.0;    ///< c_n with F_n <= c_n s e^{-sigma~ (n0 - n)} by the proof
};

struct DecayCertificate {
  double sigma_prime = 0.0;
  double sigma_tilde = 0.0;
  /// max_n c_n, the smallest constant the replayed argument yields.
  double c_prime = 0.0;
  /// Closed-form branch constant max(2C2, K e^{sigma~}, K e^{sigma'}) over the
  /// branches taken, K = 2C2 or the endpoint factor E.
  double c_prime_branch = 0.0;
  std::vector<IndexBound> bounds;  ///< indices 0..n0
  bool verified = false;
};

/// Membership in B for indices 1..n0-1 (entry 0 and n0 are false).
std::vector<bool> bad_set(const DecayProblem& p);

/// Throws PreconditionError if check_hypotheses fails.
DecayCertificate certify_decay(const DecayProblem& p);

/// Random instance satisfying every hypothesis, deterministic per seed.
/// Theta is a random fraction of its cap; F is filled backwards from a random
/// endpoint F_{n0} <= E s with E = 2 C2, each F_{n-1} drawn below the largest
/// value allowed by monotonicity and the difference inequality. Throws
/// InvalidParameter for nonpositive constants and GenerationError if the
/// constraints cannot be met.
DecayProblem generate_admissible(int n0, double c1, double c2, double sigma, double scale,
                                 std::uint64_t seed);

}  // namespace polyneck
