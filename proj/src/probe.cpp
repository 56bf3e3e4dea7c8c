#include "sqc/probe.hpp"

#include "sqc/errors.hpp"
#include "sqc/sphere.hpp"
#include "sqc/witness.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace sqc {

namespace {

using kernels::ProbeCandidate;
using kernels::ProbeTest;

struct GeodesicBest {
  double margin = -std::numeric_limits<double>::infinity();
  double t = 0.5;
};

GeodesicBest geodesic_margin(const SymMatrix &a, const Vector &x,
                             const Vector &y) {
  GeodesicBest best;
  const GeodesicSegment g{SpherePoint(x), SpherePoint(y)};
  if (g.length() < 1e-12 || g.antipodal())
    return best;
  const double c = std::max(a.quadratic_form(x), a.quadratic_form(y));
  for (int k = 1; k <= 7; ++k) {
    const double t = k / 8.0;
    const auto [alpha, beta] = g.combination(t);
    const double m = shifted_form(a, c, alpha * x + beta * y);
    if (m > best.margin)
      best = {m, t};
  }
  return best;
}

// Margins vanish quadratically as y -> x, so the search ranks pairs by
// margin / |x - y|^2; otherwise it drifts onto the diagonal x = y.
double normalized(const ProbeCandidate &c) {
  return c.margin / std::max((c.x - c.y).squaredNorm(), 1e-6);
}

// Coordinate search over the 2n coordinates of (x, y): try +-step on each,
// clamp to the orthant, renormalize, keep strict improvements of the
// normalized margin (best of the three tests); halve the step after a pass
// without improvement.
void refine(const SymMatrix &a, ProbeCandidate &cand, int passes, double step) {
  const Eigen::Index n = cand.x.size();
  cand = kernels::score(a, cand.x, cand.y);
  double best = normalized(cand);
  for (int pass = 0; pass < passes && step > 1e-12; ++pass) {
    bool improved = false;
    for (int which = 0; which < 2; ++which) {
      for (Eigen::Index i = 0; i < n; ++i) {
        for (double sign : {1.0, -1.0}) {
          Vector x = cand.x;
          Vector y = cand.y;
          Vector &v = which == 0 ? x : y;
          v(i) = std::max(0.0, v(i) + sign * step);
          const double norm = v.norm();
          if (!(norm > 0.0))
            continue;
          v /= norm;
          ProbeCandidate next = kernels::score(a, x, y);
          const double m = normalized(next);
          if (m > best) {
            best = m;
            cand = std::move(next);
            improved = true;
          }
        }
      }
    }
    if (!improved)
      step *= 0.5;
  }
}

Witness make_witness(const SymMatrix &a, const ProbeCandidate &cand) {
  switch (cand.test) {
  case ProbeTest::Pair:
    return PairViolation{cand.x, cand.y, pair_margin(a, cand.x, cand.y)};
  case ProbeTest::Midpoint: {
    const double c =
        std::max(a.quadratic_form(cand.x), a.quadratic_form(cand.y));
    return ConeNonconvexity{c, cand.x, cand.y, shifted_form(a, c, cand.x + cand.y)};
  }
  case ProbeTest::Geodesic:
    break;
  }
  const GeodesicBest gb = geodesic_margin(a, cand.x, cand.y);
  const GeodesicSegment g{SpherePoint(cand.x), SpherePoint(cand.y)};
  const auto [alpha, beta] = g.combination(gb.t);
  const double c = std::max(a.quadratic_form(cand.x), a.quadratic_form(cand.y));
  ConeNonconvexity w{c, alpha * cand.x, beta * cand.y, 0.0};
  w.margin = shifted_form(a, c, w.x + w.y);
  return w;
}

// Unit nonnegative eigenvectors of every principal submatrix, embedded in R^n
// (the critical points of q_A on the faces of the orthant), plus a symmetric
// angle grid on every two-coordinate edge. Violations often sit on faces
// where interior samples rarely land.
std::vector<Vector> face_points(const SymMatrix &a) {
  const int n = a.dim();
  std::vector<Vector> out;
  constexpr int kEdgeGrid = 8;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 1; k < kEdgeGrid; ++k) {
        const double t = 0.5 * std::numbers::pi * k / kEdgeGrid;
        Vector x = Vector::Zero(n);
        x(i) = std::cos(t);
        x(j) = std::sin(t);
        out.push_back(std::move(x));
      }
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i))
        idx.push_back(i);
    const EigenSystem sub = eigen_decompose(a.principal(idx));
    for (Eigen::Index c = 0; c < sub.vectors.cols(); ++c) {
      Vector u = sub.vectors.col(c);
      if (u.minCoeff() < -1e-12)
        u = -u;
      if (u.minCoeff() < -1e-12)
        continue;
      Vector x = Vector::Zero(n);
      for (std::size_t r = 0; r < idx.size(); ++r)
        x(idx[r]) = std::max(0.0, u(static_cast<Eigen::Index>(r)));
      out.push_back(x / x.norm());
    }
  }
  return out;
}

double witness_margin(const Witness &w) {
  if (const auto *p = std::get_if<PairViolation>(&w))
    return p->margin;
  if (const auto *c = std::get_if<ConeNonconvexity>(&w))
    return c->margin;
  return 0.0;
}

} // namespace

ProbeReport falsify(const SymMatrix &a, std::int64_t samples, std::uint64_t seed,
                    const ProbeOptions &opt) {
  if (samples < 1)
    throw InputError("falsify needs at least one sample");

  std::vector<ProbeCandidate> pool =
      opt.exec == Exec::Parallel
          ? kernels::scan_chunks_parallel(a, samples, seed, opt.chunks)
          : kernels::scan_chunks_serial(a, samples, seed, opt.chunks);
  if (a.dim() <= opt.face_pair_dim) {
    auto faces = kernels::best_pairs(a, face_points(a),
                                     static_cast<std::size_t>(std::max(1, opt.refine_starts)));
    for (auto &c : faces)
      pool.push_back(std::move(c));
  }
  pool.erase(std::remove_if(pool.begin(), pool.end(),
                            [](const ProbeCandidate &c) { return c.x.size() == 0; }),
             pool.end());

  ProbeReport report;
  report.samples_used = samples;
  report.seed = seed;
  if (pool.empty())
    return report;

  const auto starts = std::min<std::size_t>(
      pool.size(), static_cast<std::size_t>(std::max(1, opt.refine_starts)));
  std::stable_sort(pool.begin(), pool.end(),
                   [](const ProbeCandidate &l, const ProbeCandidate &r) {
                     return normalized(l) > normalized(r);
                   });
  // short refinement of many starts, then full refinement of the best few
  pool.resize(starts);
  for (auto &c : pool)
    refine(a, c, opt.screen_passes, opt.refine_step);
  std::stable_sort(pool.begin(), pool.end(),
                   [](const ProbeCandidate &l, const ProbeCandidate &r) {
                     return normalized(l) > normalized(r);
                   });
  const auto finals = std::min<std::size_t>(
      pool.size(), static_cast<std::size_t>(std::max(1, opt.final_starts)));
  ProbeCandidate cand;
  for (std::size_t k = 0; k < finals; ++k) {
    ProbeCandidate c = pool[k];
    refine(a, c, opt.refine_passes, opt.refine_step);
    if (c.margin > cand.margin)
      cand = std::move(c);
  }
  report.best_margin = cand.margin;
  if (cand.margin > opt.tol_margin) {
    Witness w = make_witness(a, cand);
    WitnessTolerances tol;
    tol.margin = opt.tol_margin;
    if (verify_witness(a, w, tol)) {
      report.best_margin = witness_margin(w);
      report.witness = std::move(w);
    }
  }
  return report;
}

} // namespace sqc
