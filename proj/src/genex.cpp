#include "sqc/genex.hpp"

#include "sqc/errors.hpp"
#include "sqc/exec.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

namespace sqc::genex {

namespace {

constexpr double kOrthoTol = 1e-12;

void check_orthogonal(const Matrix &v, int n, const char *what) {
  if (v.rows() != n || v.cols() != n)
    throw InputError(std::string(what) + ": basis must be " + std::to_string(n) +
                     "x" + std::to_string(n));
  if (!v.allFinite())
    throw InputError(std::string(what) + ": basis has non-finite entries");
  const double err = (v.transpose() * v - Matrix::Identity(n, n)).cwiseAbs().maxCoeff();
  if (err > kOrthoTol)
    throw InputError(std::string(what) + ": basis is not orthogonal (error " +
                     std::to_string(err) + ")");
}

SymMatrix spectral(const Matrix &v, const Vector &values) {
  Matrix a = v * values.asDiagonal() * v.transpose();
  a = 0.5 * (a + a.transpose());
  return SymMatrix(a);
}

} // namespace

Matrix ciqc_basis(int n) {
  if (n < 3)
    throw InputError("ciqc basis needs n >= 3");
  Matrix v = Matrix::Identity(n, n);
  const double r = 1.0 / std::sqrt(2.0);
  v(0, 0) = r;
  v(n - 1, 0) = r;
  v(0, n - 1) = r;
  v(n - 1, n - 1) = -r;
  return v;
}

SymMatrix make_ciqc(int n, double lambda, double mu, double nu,
                    const std::optional<Matrix> &basis) {
  if (n < 3)
    throw InputError("make_ciqc needs n >= 3");
  if (!(lambda < mu && mu < nu))
    throw InputError("make_ciqc needs lambda < mu < nu");
  const Matrix v = basis ? *basis : ciqc_basis(n);
  check_orthogonal(v, n, "make_ciqc");

  const double t = std::sqrt((nu - mu) / (mu - lambda));
  const Vector cond = v.col(0) - t * v.col(n - 1).cwiseAbs();
  if (cond.minCoeff() < -kOrthoTol)
    throw InputError("make_ciqc: v1 - sqrt((nu-mu)/(mu-lambda))|vn| is not "
                     "nonnegative (min " + std::to_string(cond.minCoeff()) + ")");

  Vector values = Vector::Constant(n, mu);
  values(0) = lambda;
  values(n - 1) = nu;
  return spectral(v, values);
}

Matrix engfm_basis(int n) {
  if (n < 3)
    throw InputError("engfm basis needs n >= 3");
  Matrix v = Matrix::Zero(n, n);
  v.col(0).setConstant(1.0 / std::sqrt(static_cast<double>(n)));
  // column j (1-based) for j = 2..n
  for (int j = 2; j <= n; ++j) {
    const double m = n + 1 - j;
    const double s = 1.0 / std::sqrt(m + m * m);
    v(0, j - 1) = s;
    v(j - 1, j - 1) = -m * s;
    for (int i = j + 1; i <= n; ++i)
      v(i - 1, j - 1) = s;
  }
  return v;
}

SymMatrix make_engfm(const std::vector<double> &eigenvalues,
                     const std::optional<Matrix> &basis) {
  const int n = static_cast<int>(eigenvalues.size());
  if (n < 3)
    throw InputError("make_engfm needs at least 3 eigenvalues");
  for (double x : eigenvalues)
    if (!std::isfinite(x))
      throw InputError("make_engfm: non-finite eigenvalue");
  if (!(eigenvalues[0] < eigenvalues[1]))
    throw InputError("make_engfm needs lambda_1 < lambda_2");
  for (int i = 2; i < n; ++i)
    if (eigenvalues[i] < eigenvalues[i - 1])
      throw InputError("make_engfm needs lambda_2 <= ... <= lambda_n");

  const double l1 = eigenvalues[0];
  const double l2 = eigenvalues[1];
  const double ln = eigenvalues[n - 1];
  Matrix v;
  if (basis) {
    v = *basis;
    check_orthogonal(v, n, "make_engfm");
    if (v.col(0).sum() < 0.0)
      v.col(0) = -v.col(0);
    const double alpha = v.col(0).minCoeff();
    if (!(alpha > 0.0))
      throw InputError("make_engfm: custom basis needs a positive first column");
    const double bound = l2 + alpha * alpha / (n - 2) * (l2 - l1);
    if (ln > bound)
      throw InputError("make_engfm: lambda_n = " + std::to_string(ln) +
                       " exceeds the bound " + std::to_string(bound));
  } else {
    v = engfm_basis(n);
    check_orthogonal(v, n, "make_engfm");
    const double bound = l2 + (l2 - l1) / (static_cast<double>(n) * (n - 2));
    if (!(ln < bound))
      throw InputError("make_engfm: lambda_n = " + std::to_string(ln) +
                       " must be below " + std::to_string(bound));
  }
  return spectral(v, Eigen::Map<const Vector>(eigenvalues.data(), n));
}

SymMatrix make_householder(const Vector &v) {
  if (v.size() < 1 || !v.allFinite())
    throw InputError("make_householder needs a finite vector");
  if (v.minCoeff() < 0.0)
    throw InputError("make_householder needs a nonnegative vector");
  const double nn = v.squaredNorm();
  if (!(nn > 0.0))
    throw InputError("make_householder needs a nonzero vector");
  const auto n = v.size();
  Matrix h = Matrix::Identity(n, n) - (2.0 / nn) * v * v.transpose();
  return SymMatrix(0.5 * (h + h.transpose()));
}

SymMatrix make_diag_two_eig(int n, double lambda, double mu) {
  if (n < 3)
    throw InputError("make_diag_two_eig needs n >= 3");
  if (!(lambda < mu))
    throw InputError("make_diag_two_eig needs lambda < mu");
  std::vector<double> d(static_cast<std::size_t>(n), mu);
  d[0] = lambda;
  return SymMatrix::diagonal(d);
}

SymMatrix make_negative_positive(int n, std::uint64_t seed) {
  if (n < 2)
    throw InputError("make_negative_positive needs n >= 2");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> weight(0.5, 1.5);
  std::uniform_real_distribution<double> jitter(0.8, 1.2);
  std::uniform_real_distribution<double> diag(0.01, 0.2);
  std::uniform_real_distribution<double> frac(0.1, 0.9);

  for (int attempt = 0; attempt < 100; ++attempt) {
    // near rank-one positive B = u u^T with a small diagonal, so the second
    // eigenvalue of -B is usually already positive
    Vector u(n);
    for (int i = 0; i < n; ++i)
      u(i) = weight(rng);
    Matrix b(n, n);
    for (int i = 0; i < n; ++i) {
      b(i, i) = diag(rng);
      for (int j = i + 1; j < n; ++j)
        b(i, j) = b(j, i) = u(i) * u(j) * jitter(rng);
    }
    Matrix a = -b;
    const EigenSystem e = eigen_decompose(SymMatrix(a));
    const double lambda2 = e.values(1);
    if (!(e.values(0) < lambda2))
      continue;
    if (lambda2 <= 0.0) {
      // smallest shift making lambda_2 positive, plus a random slack up to
      // the margin the diagonal allows
      const double room = b.diagonal().minCoeff() + lambda2;
      if (!(room > 0.0))
        continue;
      a += (-lambda2 + frac(rng) * room) * Matrix::Identity(n, n);
    }
    if (a.maxCoeff() >= 0.0)
      continue;
    SymMatrix out(a);
    const EigenSystem check = eigen_decompose(out);
    if (check.values(1) > 0.0 && check.values(0) < check.values(1))
      return out;
  }
  throw NumericalError("make_negative_positive: 100 draws rejected");
}

std::string_view to_string(Family f) {
  switch (f) {
  case Family::CiqcFamily:
    return "ciqc";
  case Family::EngfmFamily:
    return "engfm";
  case Family::Householder:
    return "householder";
  case Family::DiagonalTwoEig:
    return "diag-two-eig";
  case Family::NegativePositive:
    return "negative-positive";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family f : {Family::CiqcFamily, Family::EngfmFamily, Family::Householder,
                   Family::DiagonalTwoEig, Family::NegativePositive})
    if (name == to_string(f))
      return f;
  return std::nullopt;
}

SymMatrix build(const FamilySpec &spec) {
  const auto &p = spec.params;
  switch (spec.family) {
  case Family::CiqcFamily:
    if (p.size() != 3)
      throw InputError("ciqc needs params {lambda, mu, nu}");
    return make_ciqc(spec.n, p[0], p[1], p[2]);
  case Family::EngfmFamily:
    if (static_cast<int>(p.size()) != spec.n)
      throw InputError("engfm needs n eigenvalues");
    return make_engfm(p);
  case Family::Householder:
    if (static_cast<int>(p.size()) != spec.n)
      throw InputError("householder needs a vector of length n");
    return make_householder(Eigen::Map<const Vector>(p.data(), spec.n));
  case Family::DiagonalTwoEig:
    if (p.size() != 2)
      throw InputError("diag-two-eig needs params {lambda, mu}");
    return make_diag_two_eig(spec.n, p[0], p[1]);
  case Family::NegativePositive:
    return make_negative_positive(spec.n, spec.seed.value_or(0));
  }
  throw InputError("unknown family");
}

FamilySpec draw_family(Family family, std::uint64_t seed) {
  std::mt19937_64 rng(derive_seed(seed, static_cast<std::uint64_t>(family)));
  std::uniform_int_distribution<int> dim(3, 8);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  auto uniform = [&](double lo, double hi) { return lo + (hi - lo) * u(rng); };

  FamilySpec s;
  s.family = family;
  s.n = dim(rng);
  switch (family) {
  case Family::CiqcFamily: {
    const double lambda = uniform(-2.0, 2.0);
    const double mu = lambda + uniform(0.5, 2.0);
    const double nu = mu + (mu - lambda) * uniform(0.05, 0.95);
    s.params = {lambda, mu, nu};
    break;
  }
  case Family::EngfmFamily: {
    const double l1 = uniform(-2.0, 2.0);
    const double l2 = l1 + uniform(0.5, 2.0);
    const double room = 0.9 * (l2 - l1) / (static_cast<double>(s.n) * (s.n - 2));
    std::vector<double> rest;
    for (int i = 2; i < s.n; ++i)
      rest.push_back(l2 + room * u(rng));
    std::sort(rest.begin(), rest.end());
    s.params = {l1, l2};
    s.params.insert(s.params.end(), rest.begin(), rest.end());
    break;
  }
  case Family::Householder: {
    s.params.resize(static_cast<std::size_t>(s.n));
    for (auto &x : s.params)
      x = u(rng) < 0.3 ? 0.0 : uniform(0.05, 1.0);
    if (*std::max_element(s.params.begin(), s.params.end()) == 0.0)
      s.params[0] = 1.0;
    break;
  }
  case Family::DiagonalTwoEig: {
    const double lambda = uniform(-2.0, 2.0);
    s.params = {lambda, lambda + uniform(0.5, 3.0)};
    break;
  }
  case Family::NegativePositive:
    s.seed = rng();
    break;
  }
  return s;
}

} // namespace sqc::genex
