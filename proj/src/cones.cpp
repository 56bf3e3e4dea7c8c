#include "sqc/cones.hpp"

#include "sqc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace sqc {

namespace {
constexpr double kEdgeTol = 1e-12;
constexpr double kNonnegTol = 1e-12;
constexpr double kPerronSignTol = 1e-10;
constexpr int kPowerIterations = 10000;
constexpr int kMaskBits = 30;
} // namespace

bool is_z_matrix(const SymMatrix &a, double tol) {
  const int n = a.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (a(i, j) > tol)
        return false;
  return true;
}

bool is_irreducible(const SymMatrix &a) {
  const int n = a.dim();
  if (n == 1)
    return true;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<int> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    const int i = stack.back();
    stack.pop_back();
    for (int j = 0; j < n; ++j) {
      if (j == i || seen[static_cast<std::size_t>(j)] ||
          std::abs(a(i, j)) <= kEdgeTol)
        continue;
      seen[static_cast<std::size_t>(j)] = true;
      ++reached;
      stack.push_back(j);
    }
  }
  return reached == n;
}

PerronPair perron_pair(const SymMatrix &a) {
  if (a.matrix().minCoeff() < -kNonnegTol)
    throw InputError("perron_pair requires an entrywise nonnegative matrix");

  const EigenSystem e = eigen_decompose(a);
  const int n = a.dim();
  const double lambda_max = e.values(n - 1);

  Vector v = e.vectors.col(n - 1);
  if (v.sum() < 0.0)
    v = -v;
  if (v.minCoeff() >= -kPerronSignTol)
    return {lambda_max, v.cwiseMax(0.0).normalized()};

  // Multiple dominant eigenvalue (reducible input): the column basis can mix
  // signs. Power iteration on A + ||A||_F I from the projection of the ones
  // vector onto the dominant cluster stays in the nonnegative cone.
  const EigenStructure s = cluster_eigenvalues(e, default_cluster_tol(a));
  const EigenCluster &top = s.clusters.back();
  Vector start = Vector::Zero(n);
  const Vector ones = Vector::Ones(n);
  for (int k = top.first; k < top.first + top.multiplicity; ++k)
    start += e.vectors.col(k).dot(ones) * e.vectors.col(k);
  start = start.cwiseMax(0.0);
  if (!(start.norm() > 0.0))
    start = ones;
  start.normalize();

  const Matrix shifted =
      a.matrix() + a.frobenius_norm() * Matrix::Identity(n, n);
  const double tol = 1e-10 * a.scale();
  Vector x = start;
  for (int it = 0; it < kPowerIterations; ++it) {
    const double rho = x.dot(a.matrix() * x);
    if ((a.matrix() * x - rho * x).norm() <= tol)
      return {rho, x.cwiseMax(0.0).normalized()};
    x = (shifted * x).normalized();
  }
  throw NumericalError("power iteration for the Perron pair did not converge");
}

ParetoSpectrum pareto_spectrum(const SymMatrix &a, const ParetoOptions &opt) {
  const int n = a.dim();
  if (n > opt.max_exact_dim || n > kMaskBits)
    throw InputError("pareto_spectrum: dimension " + std::to_string(n) +
                     " exceeds max_exact_dim " +
                     std::to_string(std::min(opt.max_exact_dim, kMaskBits)) +
                     "; use the sampling minimizer (minimize) instead");

  std::vector<ParetoEigenpair> cand =
      opt.exec == Exec::Parallel ? kernels::enumerate_supports_parallel(a, opt)
                                 : kernels::enumerate_supports_serial(a, opt);
  std::stable_sort(cand.begin(), cand.end(),
                   [](const ParetoEigenpair &l, const ParetoEigenpair &r) {
                     return l.value < r.value;
                   });

  ParetoSpectrum out;
  out.exact = true;
  for (auto &c : cand) {
    bool duplicate = false;
    for (auto it = out.pairs.rbegin(); it != out.pairs.rend(); ++it) {
      if (c.value - it->value > opt.dedup_value_tol)
        break;
      if ((c.vector - it->vector).norm() <= opt.dedup_vector_tol) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate)
      out.pairs.push_back(std::move(c));
  }
  if (out.pairs.empty())
    throw NumericalError("Pareto enumeration produced no eigenpair");
  out.min_value = out.pairs.front().value;
  return out;
}

bool is_copositive(const SymMatrix &a, const ParetoOptions &opt) {
  return pareto_spectrum(a, opt).min_value >= -opt.copositive_tol;
}

bool check_KZ_property(const SymMatrix &a, const std::vector<VectorPair> &pairs) {
  for (const auto &[x, y] : pairs) {
    if (x.size() != a.dim() || y.size() != a.dim())
      throw InputError("K-Z pair has the wrong dimension");
    if (x.minCoeff() < 0.0 || y.minCoeff() < 0.0)
      throw InputError("K-Z pair must lie in the nonnegative orthant");
    if (x.dot(y) > 1e-10)
      throw InputError("K-Z pair is not complementary (<x, y> > 1e-10)");
  }
  return std::all_of(pairs.begin(), pairs.end(), [&](const VectorPair &p) {
    return a.bilinear(p.first, p.second) <= 1e-9;
  });
}

std::vector<VectorPair> canonical_complementary_pairs(int n) {
  std::vector<VectorPair> out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j)
        out.emplace_back(Vector::Unit(n, i), Vector::Unit(n, j));
  return out;
}

} // namespace sqc
