#pragma once
// Independent reference computations for the test suites. Nothing here calls
// into the library's engines.

#include "sqc/linalg.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>

namespace oracle {

using sqc::Matrix;
using sqc::Vector;

inline Matrix random_sym(int n, std::uint64_t seed, double lo = -2.0, double hi = 2.0) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(lo, hi);
  Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      m(i, j) = m(j, i) = u(rng);
  return m;
}

inline Matrix random_orthogonal(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m(i, j) = g(rng);
  Eigen::HouseholderQR<Matrix> qr(m);
  return qr.householderQ() * Matrix::Identity(n, n);
}

/// Ascending eigenvalues via Eigen's tridiagonal QL solver.
inline Vector eigenvalues(const Matrix &a) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(a, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

/// min of q_A(x)/||x||^2 over the barycentric grid {x >= 0, sum x = 1} with
/// spacing 1/den.
inline double grid_min(const Matrix &a, int den) {
  const int n = static_cast<int>(a.rows());
  std::vector<int> k(static_cast<std::size_t>(n), 0);
  double best = std::numeric_limits<double>::infinity();
  Vector x(n);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n - 1) {
      k[static_cast<std::size_t>(i)] = left;
      for (int t = 0; t < n; ++t)
        x(t) = k[static_cast<std::size_t>(t)];
      best = std::min(best, x.dot(a * x) / x.squaredNorm());
      return;
    }
    for (int v = 0; v <= left; ++v) {
      k[static_cast<std::size_t>(i)] = v;
      rec(i + 1, left - v);
    }
  };
  rec(0, den);
  return best;
}

/// Central difference of f at x along d.
inline double directional_fd(const std::function<double(const Vector &)> &f,
                             const Vector &x, const Vector &d, double h = 1e-6) {
  return (f(x + h * d) - f(x - h * d)) / (2.0 * h);
}

/// Brute-force check of quasi-convexity along the geodesic x -> y by dense
/// sampling: max over t of q(gamma(t)) - max(q(x), q(y)).
inline double geodesic_excess(const Matrix &a, const Vector &x, const Vector &y,
                              int steps = 200) {
  const double ip = std::clamp(x.dot(y), -1.0, 1.0);
  const double th = std::acos(ip);
  const double qx = x.dot(a * x), qy = y.dot(a * y);
  double worst = -std::numeric_limits<double>::infinity();
  for (int s = 1; s < steps; ++s) {
    const double t = static_cast<double>(s) / steps;
    const Vector g = (std::sin((1 - t) * th) * x + std::sin(t * th) * y) / std::sin(th);
    worst = std::max(worst, g.dot(a * g) - std::max(qx, qy));
  }
  return worst;
}

} // namespace oracle
