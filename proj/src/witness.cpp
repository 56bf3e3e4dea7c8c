#include "sqc/witness.hpp"

#include "sqc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace sqc {

namespace {

bool in_orthant(const Vector &x, double slack) {
  return x.size() > 0 && x.allFinite() && x.minCoeff() >= -slack;
}

bool reproduces(double recomputed, double stored) {
  return recomputed >= stored - 1e-12 * std::max(1.0, std::abs(stored));
}

struct Verifier {
  const SymMatrix &a;
  const WitnessTolerances &tol;

  bool dims(const Vector &v) const { return v.size() == a.dim(); }

  bool operator()(const PairViolation &w) const {
    if (!dims(w.x) || !dims(w.y))
      return false;
    if (!in_orthant(w.x, tol.orthant) || !in_orthant(w.y, tol.orthant))
      return false;
    if (std::abs(w.x.norm() - 1.0) > 1e-9 || std::abs(w.y.norm() - 1.0) > 1e-9)
      return false;
    const double m = pair_margin(a, w.x, w.y);
    return m > tol.margin && reproduces(m, w.margin);
  }

  bool operator()(const ConeNonconvexity &w) const {
    if (!dims(w.x) || !dims(w.y))
      return false;
    if (!in_orthant(w.x, tol.orthant) || !in_orthant(w.y, tol.orthant))
      return false;
    if (shifted_form(a, w.shift, w.x) > tol.sublevel ||
        shifted_form(a, w.shift, w.y) > tol.sublevel)
      return false;
    const double m = shifted_form(a, w.shift, w.x + w.y);
    return m > tol.margin && reproduces(m, w.margin);
  }

  bool operator()(const ZViolation &w) const {
    const int n = a.dim();
    if (w.i < 0 || w.j < 0 || w.i >= n || w.j >= n || w.i == w.j)
      return false;
    const double e = a(w.i, w.j);
    return e > tol.z_entry && std::abs(e - w.entry) <= 1e-12 * a.scale();
  }

  bool operator()(const ThreeNonnegEigenvectors &w) const {
    for (int k = 0; k < 3; ++k) {
      const Vector &v = w.vectors[static_cast<std::size_t>(k)];
      if (!dims(v) || !in_orthant(v, tol.orthonormal))
        return false;
      const double lambda = w.values[static_cast<std::size_t>(k)];
      if ((a.matrix() * v - lambda * v).norm() > tol.eigen * a.scale())
        return false;
      for (int l = 0; l < 3; ++l) {
        const double ip = v.dot(w.vectors[static_cast<std::size_t>(l)]);
        if (std::abs(ip - (k == l ? 1.0 : 0.0)) > tol.orthonormal)
          return false;
      }
    }
    if (!(w.values[0] <= w.values[1] && w.values[1] < w.values[2]))
      return false;
    return (*this)(w.cone);
  }
};

} // namespace

std::string_view witness_kind(const Witness &w) {
  struct Name {
    std::string_view operator()(const PairViolation &) const {
      return "PairViolation";
    }
    std::string_view operator()(const ConeNonconvexity &) const {
      return "ConeNonconvexity";
    }
    std::string_view operator()(const ZViolation &) const { return "ZViolation"; }
    std::string_view operator()(const ThreeNonnegEigenvectors &) const {
      return "ThreeNonnegEigenvectors";
    }
  };
  return std::visit(Name{}, w);
}

bool verify_witness(const SymMatrix &a, const Witness &w,
                    const WitnessTolerances &tol) {
  return std::visit(Verifier{a, tol}, w);
}

double pair_margin(const SymMatrix &a, const Vector &x, const Vector &y) {
  const Vector ax = a.matrix() * x;
  const double qx = ax.dot(x);
  const double qy = a.quadratic_form(y);
  return ax.dot(y) - x.dot(y) * std::max(qx, qy);
}

double check_prop8b(const SymMatrix &a, const Vector &x, const Vector &y) {
  if (x.size() != a.dim() || y.size() != a.dim())
    throw InputError("check_prop8b: dimension mismatch");
  if (!in_orthant(x, 1e-12) || !in_orthant(y, 1e-12))
    throw InputError("check_prop8b: points must lie in the closed nonnegative "
                     "orthant");
  if (std::abs(x.norm() - 1.0) > 1e-9 || std::abs(y.norm() - 1.0) > 1e-9)
    throw InputError("check_prop8b: points must lie on the unit sphere");
  return pair_margin(a, x, y);
}

double shifted_form(const SymMatrix &a, double c, const Vector &z) {
  return a.quadratic_form(z) - c * z.squaredNorm();
}

ConeNonconvexity construct_diag_witness(std::span<const double> diag,
                                        double cluster_tol) {
  const int n = static_cast<int>(diag.size());
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int l, int r) {
    return diag[static_cast<std::size_t>(l)] < diag[static_cast<std::size_t>(r)];
  });

  // Group sorted coordinates into clusters of (near) equal eigenvalues.
  std::vector<std::vector<int>> clusters;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const int idx = order[k];
    if (k == 0 || diag[static_cast<std::size_t>(idx)] -
                          diag[static_cast<std::size_t>(order[k - 1])] >
                      cluster_tol)
      clusters.emplace_back();
    clusters.back().push_back(idx);
  }

  int i = 0, j = 0, k = 0;
  if (clusters.size() >= 2 && clusters[0].size() >= 2) {
    i = clusters[0][0];
    j = clusters[0][1];
    k = clusters[1][0];
  } else if (clusters.size() >= 3) {
    i = clusters[0][0];
    j = clusters[1][0];
    k = clusters[2][0];
  } else {
    throw std::logic_error("construct_diag_witness: diagonal matrix has two "
                           "eigenvalues with a simple smallest one (or is "
                           "constant); no witness exists");
  }

  const auto d = [&](int m) { return diag[static_cast<std::size_t>(m)]; };
  const double nu = d(k);
  const double c = 0.5 * (d(j) + nu);
  const double ti = std::sqrt((c - d(i)) / (nu - c));
  const double tj = std::sqrt((c - d(j)) / (nu - c));

  ConeNonconvexity w;
  w.shift = c;
  w.x = Vector::Unit(n, i) + ti * Vector::Unit(n, k);
  w.y = Vector::Unit(n, j) + tj * Vector::Unit(n, k);
  const Vector s = w.x + w.y;
  double m = 0.0;
  for (int r = 0; r < n; ++r)
    m += (d(r) - c) * s(r) * s(r);
  w.margin = m;
  return w;
}

ConeNonconvexity construct_threevec_witness(const std::array<Vector, 3> &vectors,
                                            const std::array<double, 3> &values,
                                            double cluster_tol) {
  const auto n = vectors[0].size();
  for (int k = 0; k < 3; ++k) {
    const Vector &v = vectors[static_cast<std::size_t>(k)];
    if (v.size() != n || !in_orthant(v, 1e-9))
      throw InputError("construct_threevec_witness: eigenvectors must be "
                       "nonnegative and of equal dimension");
    for (int l = 0; l < 3; ++l)
      if (std::abs(v.dot(vectors[static_cast<std::size_t>(l)]) -
                   (k == l ? 1.0 : 0.0)) > 1e-9)
        throw InputError("construct_threevec_witness: eigenvectors must be "
                         "orthonormal");
  }
  std::array<int, 3> ord{0, 1, 2};
  std::stable_sort(ord.begin(), ord.end(), [&](int l, int r) {
    return values[static_cast<std::size_t>(l)] < values[static_cast<std::size_t>(r)];
  });
  const auto val = [&](int r) {
    return values[static_cast<std::size_t>(ord[static_cast<std::size_t>(r)])];
  };
  const auto vec = [&](int r) -> const Vector & {
    return vectors[static_cast<std::size_t>(ord[static_cast<std::size_t>(r)])];
  };
  if (!(val(2) - val(1) > cluster_tol))
    throw InputError("construct_threevec_witness: the largest eigenvalue must "
                     "exceed the other two (the pattern l1 < l2 = l3 admits "
                     "no cone witness)");

  const double c = 0.5 * (val(1) + val(2));
  const double l1 = val(0) - c;
  const double l2 = val(1) - c;
  const double l3 = val(2) - c;
  const double t1 = std::sqrt(-l1 / l3);
  const double t2 = std::sqrt(-l2 / l3);

  ConeNonconvexity w;
  w.shift = c;
  w.x = (vec(0) + t1 * vec(2)).cwiseMax(0.0);
  w.y = (vec(1) + t2 * vec(2)).cwiseMax(0.0);
  w.margin = 2.0 * std::sqrt(l1 * l2);
  return w;
}

} // namespace sqc
