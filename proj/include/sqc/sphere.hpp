#pragma once

#include "sqc/linalg.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace sqc {

/// A point of the unit sphere S^{n-1}; coordinates are renormalized on
/// construction.
class SpherePoint {
public:
  explicit SpherePoint(const Vector &coords);

  const Vector &coords() const { return x_; }
  int dim() const { return static_cast<int>(x_.size()); }
  double operator[](int i) const { return x_(i); }

private:
  Vector x_;
};

/// arccos of the inner product, clamped to [-1, 1]. Result lies in [0, pi].
double intrinsic_distance(const SpherePoint &x, const SpherePoint &y);

/// Minimal geodesic from x to y parameterized over t in [0, 1]. Antipodal
/// endpoints (distance > pi - 1e-9) need a unit tangent direction at x.
class GeodesicSegment {
public:
  GeodesicSegment(SpherePoint x, SpherePoint y,
                  std::optional<Vector> antipodal_direction = std::nullopt);

  const SpherePoint &start() const { return x_; }
  const SpherePoint &end() const { return y_; }
  double length() const { return length_; }
  bool antipodal() const { return mode_ == Mode::Antipodal; }

  SpherePoint at(double t) const;
  /// Coefficients (alpha, beta) with gamma(t) = alpha x + beta y. Only
  /// meaningful for non-antipodal, non-degenerate segments.
  std::pair<double, double> combination(double t) const;

private:
  enum class Mode { Constant, Regular, Antipodal };

  SpherePoint x_;
  SpherePoint y_;
  double length_ = 0.0;
  double inner_ = 1.0;
  double tangent_norm_ = 0.0;
  Vector tangent_; // unit tangent at x pointing towards y
  Mode mode_ = Mode::Constant;
};

inline SpherePoint geodesic_eval(const GeodesicSegment &g, double t) {
  return g.at(t);
}

/// grad q_A(x) = 2 (Ax - <Ax, x> x), the projection of the Euclidean gradient
/// onto the tangent space at x.
Vector spherical_gradient_qA(const SymMatrix &a, const SpherePoint &x);

/// `count` points of S^{n-1} with strictly positive coordinates: absolute
/// values of standard normal draws, normalized. Deterministic per seed.
std::vector<SpherePoint> sample_orthant_sphere(int n, std::int64_t count,
                                               std::uint64_t seed);

/// Fills `out` (n x count, column per point) with the same draws as
/// sample_orthant_sphere; used by hot loops to avoid per-point allocation.
void sample_orthant_columns(int n, std::uint64_t seed, Matrix &out);

} // namespace sqc
