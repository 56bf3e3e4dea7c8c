#include "sqc/probe.hpp"
#include "sqc/sphere.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>

namespace sqc::kernels {

namespace {

struct Scored {
  double margin;
  ProbeTest test;
  double rank; // margin / |x - y|^2
};

// Scores one pair of unit orthant points with the three tests and returns the
// largest margin. All quantities are formed from Ax, Ay and inner products.
Scored score_pair(const Vector &ax, const Vector &x, const Vector &y,
                  double qy) {
  const double qx = ax.dot(x);
  const double axy = ax.dot(y);
  const double ip = x.dot(y);
  const double c = std::max(qx, qy);

  Scored best{axy - ip * c, ProbeTest::Pair, 0.0};

  const double mid = qx + 2.0 * axy + qy - c * (2.0 + 2.0 * ip);
  if (mid > best.margin)
    best = {mid, ProbeTest::Midpoint, 0.0};

  const double ipc = std::clamp(ip, -1.0, 1.0);
  const double theta = std::acos(ipc);
  if (theta >= 1e-12) {
    const double s = std::sqrt(std::max(0.0, 1.0 - ipc * ipc));
    for (int k = 1; k <= 7; ++k) {
      const double arc = theta * k / 8.0;
      const double beta = std::sin(arc) / s;
      const double alpha = std::cos(arc) - ipc * beta;
      const double q = alpha * alpha * qx + 2.0 * alpha * beta * axy +
                       beta * beta * qy;
      const double norm2 = alpha * alpha + 2.0 * alpha * beta * ip + beta * beta;
      const double m = q - c * norm2;
      if (m > best.margin)
        best = {m, ProbeTest::Geodesic, 0.0};
    }
  }
  best.rank = best.margin / std::max(2.0 - 2.0 * ip, 1e-6);
  return best;
}

std::int64_t chunk_begin(std::int64_t samples, int chunks, int c) {
  return samples * c / chunks;
}

ProbeCandidate scan_chunk(const SymMatrix &a, std::int64_t samples,
                          std::uint64_t seed, int chunks, int c) {
  const std::int64_t begin = chunk_begin(samples, chunks, c);
  const std::int64_t count = chunk_begin(samples, chunks, c + 1) - begin;
  ProbeCandidate best;
  if (count <= 0)
    return best;

  const int n = a.dim();
  Matrix pts(n, 2 * count);
  sample_orthant_columns(n, derive_seed(seed, static_cast<std::uint64_t>(c)), pts);
  const Matrix apts = a.matrix() * pts;

  std::int64_t arg = -1;
  ProbeTest test = ProbeTest::Pair;
  double rank = -std::numeric_limits<double>::infinity();
  for (std::int64_t s = 0; s < count; ++s) {
    const Eigen::Index xi = 2 * s;
    const Eigen::Index yi = 2 * s + 1;
    const double qy = apts.col(yi).dot(pts.col(yi));
    const Scored sc = score_pair(apts.col(xi), pts.col(xi), pts.col(yi), qy);
    if (sc.rank > rank) {
      rank = sc.rank;
      best.margin = sc.margin;
      test = sc.test;
      arg = s;
    }
  }
  if (arg >= 0) {
    best.test = test;
    best.x = pts.col(2 * arg);
    best.y = pts.col(2 * arg + 1);
  }
  return best;
}

ProbeCandidate merge(std::vector<ProbeCandidate> &parts) {
  ProbeCandidate best;
  for (auto &p : parts)
    if (p.margin > best.margin)
      best = std::move(p);
  return best;
}

int effective_chunks(std::int64_t samples, int chunks) {
  return static_cast<int>(std::max<std::int64_t>(
      1, std::min<std::int64_t>(samples, std::max(1, chunks))));
}

} // namespace

std::vector<ProbeCandidate> scan_chunks_serial(const SymMatrix &a, std::int64_t samples,
                                               std::uint64_t seed, int chunks) {
  const int k = effective_chunks(samples, chunks);
  std::vector<ProbeCandidate> parts(static_cast<std::size_t>(k));
  for (int c = 0; c < k; ++c)
    parts[static_cast<std::size_t>(c)] = scan_chunk(a, samples, seed, k, c);
  return parts;
}

std::vector<ProbeCandidate> scan_chunks_parallel(const SymMatrix &a, std::int64_t samples,
                                                 std::uint64_t seed, int chunks) {
  const int k = effective_chunks(samples, chunks);
  std::vector<ProbeCandidate> parts(static_cast<std::size_t>(k));
#pragma omp parallel for schedule(static)
  for (int c = 0; c < k; ++c)
    parts[static_cast<std::size_t>(c)] = scan_chunk(a, samples, seed, k, c);
  return parts;
}

ProbeCandidate scan_serial(const SymMatrix &a, std::int64_t samples,
                           std::uint64_t seed, int chunks) {
  auto parts = scan_chunks_serial(a, samples, seed, chunks);
  return merge(parts);
}

ProbeCandidate scan_parallel(const SymMatrix &a, std::int64_t samples,
                             std::uint64_t seed, int chunks) {
  auto parts = scan_chunks_parallel(a, samples, seed, chunks);
  return merge(parts);
}

std::vector<ProbeCandidate> best_pairs(const SymMatrix &a, const std::vector<Vector> &pts,
                                       std::size_t keep) {
  const auto m = static_cast<Eigen::Index>(pts.size());
  if (m < 2 || keep == 0)
    return {};
  Matrix p(a.dim(), m);
  for (Eigen::Index k = 0; k < m; ++k)
    p.col(k) = pts[static_cast<std::size_t>(k)];
  const Matrix ap = a.matrix() * p;
  const Vector q = ap.cwiseProduct(p).colwise().sum().transpose();

  struct Entry {
    double rank;
    Eigen::Index i, j;
  };
  std::vector<Entry> all;
  all.reserve(static_cast<std::size_t>(m * (m - 1) / 2));
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = i + 1; j < m; ++j)
      all.push_back({score_pair(ap.col(i), p.col(i), p.col(j), q(j)).rank, i, j});
  const auto top = std::min(keep, all.size());
  // ties resolve by index so the selection is deterministic
  std::partial_sort(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(top), all.end(),
                    [](const Entry &l, const Entry &r) {
                      if (l.rank != r.rank)
                        return l.rank > r.rank;
                      return l.i != r.i ? l.i < r.i : l.j < r.j;
                    });
  std::vector<ProbeCandidate> out;
  for (std::size_t k = 0; k < top; ++k) {
    const Entry &e = all[k];
    const Scored sc = score_pair(ap.col(e.i), p.col(e.i), p.col(e.j), q(e.j));
    out.push_back(ProbeCandidate{sc.margin, sc.test, p.col(e.i), p.col(e.j)});
  }
  return out;
}

ProbeCandidate score(const SymMatrix &a, const Vector &x, const Vector &y) {
  const Vector ax = a.matrix() * x;
  const Scored sc = score_pair(ax, x, y, a.quadratic_form(y));
  return ProbeCandidate{sc.margin, sc.test, x, y};
}

} // namespace sqc::kernels
