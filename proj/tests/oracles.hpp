#pragma once

// Test-only reference computations, kept independent of the library code
// paths they check.

#include <array>
#include <cmath>
#include <functional>
#include <vector>

#include "polyneck/exact.hpp"

namespace oracle {

/// Composite 5-point Gauss-Legendre rule: `panels` panels, 5 * panels nodes.
inline double quadrature(const std::function<double(double)>& f, double a, double b, int panels = 2000) {
  static const std::array<double, 5> nodes{0.0, -0.5384693101056831, 0.5384693101056831, -0.9061798459386640,
                                           0.9061798459386640};
  static const std::array<double, 5> weights{0.5688888888888889, 0.4786286704993665, 0.4786286704993665,
                                             0.2369268850561891, 0.2369268850561891};
  const double h = (b - a) / panels;
  double sum = 0.0;
  for (int i = 0; i < panels; ++i) {
    const double mid = a + (i + 0.5) * h;
    double panel = 0.0;
    for (int q = 0; q < 5; ++q) panel += weights[q] * f(mid + 0.5 * h * nodes[q]);
    sum += 0.5 * h * panel;
  }
  return sum;
}

inline bool close(double x, double y, double rel, double abs = 0.0) {
  return std::abs(x - y) <= rel * std::max(std::abs(x), std::abs(y)) + abs;
}

/// Exact determinant by rational Gaussian elimination.
inline polyneck::Rational determinant(std::vector<std::vector<polyneck::Rational>> a) {
  const std::size_t n = a.size();
  polyneck::Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      const polyneck::Rational factor = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
    }
  }
  return det;
}

}  // namespace oracle
