#include "sqc/sphere.hpp"

#include "sqc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace sqc {

namespace {
constexpr double kAntipodalGap = 1e-9;
constexpr double kCoincident = 1e-12;
} // namespace

SpherePoint::SpherePoint(const Vector &coords) {
  if (coords.size() < 1 || !coords.allFinite())
    throw InputError("sphere point needs finite coordinates");
  const double norm = coords.norm();
  if (!(norm > 0.0))
    throw InputError("sphere point cannot be the zero vector");
  x_ = coords / norm;
}

double intrinsic_distance(const SpherePoint &x, const SpherePoint &y) {
  const double ip = std::clamp(x.coords().dot(y.coords()), -1.0, 1.0);
  return std::acos(ip);
}

GeodesicSegment::GeodesicSegment(SpherePoint x, SpherePoint y,
                                 std::optional<Vector> antipodal_direction)
    : x_(std::move(x)), y_(std::move(y)) {
  if (x_.dim() != y_.dim())
    throw InputError("geodesic endpoints have different dimensions");
  inner_ = std::clamp(x_.coords().dot(y_.coords()), -1.0, 1.0);
  length_ = std::acos(inner_);

  if (length_ < kCoincident) {
    mode_ = Mode::Constant;
    return;
  }
  if (length_ > std::numbers::pi - kAntipodalGap) {
    if (!antipodal_direction)
      throw InputError("antipodal geodesic endpoints require a unit tangent "
                       "direction at the start point");
    const Vector &d = *antipodal_direction;
    if (d.size() != x_.dim() || std::abs(d.norm() - 1.0) > 1e-12 ||
        std::abs(d.dot(x_.coords())) > 1e-12)
      throw InputError("antipodal direction must be a unit vector tangent to "
                       "the start point");
    mode_ = Mode::Antipodal;
    length_ = std::numbers::pi;
    tangent_ = d;
    tangent_norm_ = 1.0;
    return;
  }
  mode_ = Mode::Regular;
  Vector u = y_.coords() - inner_ * x_.coords();
  tangent_norm_ = u.norm();
  tangent_ = u / tangent_norm_;
}

SpherePoint GeodesicSegment::at(double t) const {
  switch (mode_) {
  case Mode::Constant:
    return x_;
  case Mode::Antipodal:
  case Mode::Regular:
    break;
  }
  if (t == 1.0 && mode_ == Mode::Regular)
    return y_;
  const double arc = t * length_;
  return SpherePoint(std::cos(arc) * x_.coords() + std::sin(arc) * tangent_);
}

std::pair<double, double> GeodesicSegment::combination(double t) const {
  // gamma(t) = cos(arc) x + sin(arc) (y - <x,y> x) / ||y - <x,y> x||
  const double arc = t * length_;
  const double beta = std::sin(arc) / tangent_norm_;
  const double alpha = std::cos(arc) - inner_ * beta;
  return {alpha, beta};
}

Vector spherical_gradient_qA(const SymMatrix &a, const SpherePoint &x) {
  if (a.dim() != x.dim())
    throw InputError("dimension mismatch between matrix and point");
  const Vector ax = a.matrix() * x.coords();
  return 2.0 * (ax - ax.dot(x.coords()) * x.coords());
}

void sample_orthant_columns(int n, std::uint64_t seed, Matrix &out) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  out.resize(n, out.cols());
  for (Eigen::Index c = 0; c < out.cols(); ++c) {
    for (;;) {
      for (int i = 0; i < n; ++i)
        out(i, c) = std::abs(normal(rng));
      const double norm = out.col(c).norm();
      if (norm > 0.0) {
        out.col(c) /= norm;
        if (out.col(c).minCoeff() > 0.0)
          break;
      }
    }
  }
}

std::vector<SpherePoint> sample_orthant_sphere(int n, std::int64_t count,
                                               std::uint64_t seed) {
  if (n < 1)
    throw InputError("sampling dimension must be >= 1");
  if (count < 0)
    throw InputError("sample count must be >= 0");
  std::vector<SpherePoint> out;
  if (count == 0)
    return out;
  Matrix cols(n, count);
  sample_orthant_columns(n, seed, cols);
  out.reserve(static_cast<std::size_t>(count));
  for (Eigen::Index c = 0; c < count; ++c)
    out.emplace_back(cols.col(c));
  return out;
}

} // namespace sqc
