#include "sqc/linalg.hpp"

#include "sqc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace sqc {

SymMatrix::SymMatrix(const Matrix &entries, double asym_tol) {
  if (entries.rows() < 1 || entries.rows() != entries.cols()) {
    std::ostringstream os;
    os << "matrix must be square with n >= 1 (got " << entries.rows() << "x"
       << entries.cols() << ")";
    throw InputError(os.str());
  }
  if (!entries.allFinite())
    throw InputError("matrix has non-finite entries");

  const double bound = asym_tol * std::max(1.0, entries.cwiseAbs().maxCoeff());
  const int n = static_cast<int>(entries.rows());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (std::abs(entries(i, j) - entries(j, i)) > bound) {
        std::ostringstream os;
        os << "matrix is not symmetric: a(" << i << "," << j
           << ") = " << entries(i, j) << " vs a(" << j << "," << i
           << ") = " << entries(j, i);
        throw InputError(os.str());
      }
    }
  }
  a_ = 0.5 * (entries + entries.transpose());
}

SymMatrix SymMatrix::from_rows(const std::vector<std::vector<double>> &rows,
                               double asym_tol) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  Matrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (static_cast<Eigen::Index>(rows[i].size()) != n)
      throw InputError("row " + std::to_string(i) + " has " +
                       std::to_string(rows[i].size()) + " entries, expected " +
                       std::to_string(n));
    for (Eigen::Index j = 0; j < n; ++j)
      m(i, j) = rows[i][j];
  }
  return SymMatrix(m, asym_tol);
}

SymMatrix SymMatrix::diagonal(std::span<const double> diag) {
  Vector d(static_cast<Eigen::Index>(diag.size()));
  for (std::size_t i = 0; i < diag.size(); ++i)
    d(static_cast<Eigen::Index>(i)) = diag[i];
  return SymMatrix(Matrix(d.asDiagonal()));
}

SymMatrix SymMatrix::identity(int n) {
  return SymMatrix(Matrix::Identity(n, n));
}

double SymMatrix::scale() const { return std::max(1.0, frobenius_norm()); }

SymMatrix SymMatrix::shifted(double c) const {
  Matrix m = a_;
  m.diagonal().array() += c;
  return SymMatrix(std::move(m), Trusted{});
}

SymMatrix SymMatrix::scaled(double s) const {
  return SymMatrix(Matrix(s * a_), Trusted{});
}

SymMatrix SymMatrix::principal(std::span<const int> idx) const {
  const auto k = static_cast<Eigen::Index>(idx.size());
  Matrix m(k, k);
  for (Eigen::Index r = 0; r < k; ++r)
    for (Eigen::Index c = 0; c < k; ++c)
      m(r, c) = a_(idx[r], idx[c]);
  return SymMatrix(std::move(m), Trusted{});
}

namespace {

double max_off_diagonal(const Matrix &a) {
  double m = 0.0;
  const auto n = a.rows();
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j)
      m = std::max(m, std::abs(a(i, j)));
  return m;
}

// One Jacobi rotation annihilating a(p, q); updates a in place and
// accumulates the rotation into v.
void rotate(Matrix &a, Matrix &v, Eigen::Index p, Eigen::Index q) {
  const double apq = a(p, q);
  const double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                   (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const auto n = a.rows();
  for (Eigen::Index k = 0; k < n; ++k) {
    const double akp = a(k, p);
    const double akq = a(k, q);
    a(k, p) = c * akp - s * akq;
    a(k, q) = s * akp + c * akq;
  }
  for (Eigen::Index k = 0; k < n; ++k) {
    const double apk = a(p, k);
    const double aqk = a(q, k);
    a(p, k) = c * apk - s * aqk;
    a(q, k) = s * apk + c * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;

  for (Eigen::Index k = 0; k < n; ++k) {
    const double vkp = v(k, p);
    const double vkq = v(k, q);
    v(k, p) = c * vkp - s * vkq;
    v(k, q) = s * vkp + c * vkq;
  }
}

} // namespace

EigenSystem eigen_decompose(const SymMatrix &input) {
  constexpr int kMaxSweeps = 100;
  const auto n = static_cast<Eigen::Index>(input.dim());
  Matrix a = input.matrix();
  Matrix v = Matrix::Identity(n, n);
  const double threshold = 1e-12 * input.frobenius_norm();

  int sweeps = 0;
  while (max_off_diagonal(a) > threshold) {
    if (sweeps == kMaxSweeps)
      throw NumericalError("Jacobi eigensolver did not converge in " +
                           std::to_string(kMaxSweeps) +
                           " sweeps; input is ill-conditioned");
    for (Eigen::Index p = 0; p < n; ++p)
      for (Eigen::Index q = p + 1; q < n; ++q)
        if (std::abs(a(p, q)) > threshold)
          rotate(a, v, p, q);
    ++sweeps;
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index l, Eigen::Index r) {
                     return a(l, l) < a(r, r);
                   });

  EigenSystem out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  out.sweeps = sweeps;
  for (Eigen::Index k = 0; k < n; ++k) {
    const Eigen::Index src = order[static_cast<std::size_t>(k)];
    out.values(k) = a(src, src);
    Vector col = v.col(src);
    Eigen::Index arg = 0;
    col.cwiseAbs().maxCoeff(&arg);
    if (col(arg) < 0.0)
      col = -col;
    out.vectors.col(k) = col;
  }
  out.residual = (input.matrix() - out.vectors * out.values.asDiagonal() *
                                       out.vectors.transpose())
                     .norm();
  return out;
}

double default_cluster_tol(const SymMatrix &a) { return 1e-8 * a.scale(); }

EigenStructure cluster_eigenvalues(const EigenSystem &e, double tol) {
  EigenStructure s;
  const auto n = e.values.size();
  Eigen::Index start = 0;
  while (start < n) {
    Eigen::Index end = start + 1;
    while (end < n && e.values(end) - e.values(end - 1) <= tol)
      ++end;
    EigenCluster c;
    c.first = static_cast<int>(start);
    c.multiplicity = static_cast<int>(end - start);
    c.value = e.values.segment(start, end - start).mean();
    s.clusters.push_back(c);
    start = end;
  }
  return s;
}

bool is_diagonal(const SymMatrix &a, double tol) {
  return max_off_diagonal(a.matrix()) <= tol;
}

SymMatrix permute_similarity(const SymMatrix &a, std::span<const int> perm) {
  const int n = a.dim();
  if (static_cast<int>(perm.size()) != n)
    throw InputError("permutation length " + std::to_string(perm.size()) +
                     " does not match dimension " + std::to_string(n));
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int p : perm) {
    if (p < 0 || p >= n || seen[static_cast<std::size_t>(p)])
      throw InputError("invalid permutation");
    seen[static_cast<std::size_t>(p)] = true;
  }
  Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m(i, j) = a(perm[static_cast<std::size_t>(i)],
                  perm[static_cast<std::size_t>(j)]);
  return SymMatrix(m, 0.0);
}

} // namespace sqc
