#pragma once

// Overflow-safe integrals of exponential-polynomial terms t^p e^{alpha t}
// with integer alpha. Values are carried in the log domain: the dominant
// factor e^{alpha c}, c the endpoint where alpha t is largest, is split off
// before anything is exponentiated.

#include <span>

namespace polyneck {

/// log of the integral of e^{alpha t} over [a, b]; requires a < b.
/// The alpha = 0 branch is selected by the exact integer test.
double log_exp_integral(long alpha, double a, double b);

/// The integral of e^{alpha t} over [a, b] (may overflow to inf).
double exp_integral(long alpha, double a, double b);

/// One term coeff * t^power * e^{alpha t} of a real function of t.
struct ExpPolyTerm {
  int power = 0;
  long alpha = 0;
  double coeff = 0.0;
};

/// log of the integral over [a, b] of (sum of terms)^2; -inf if it vanishes.
double log_square_integral(std::span<const ExpPolyTerm> terms, double a, double b);

/// log(exp(x) + exp(y)), safe for -inf arguments.
double log_add(double x, double y);

}  // namespace polyneck
