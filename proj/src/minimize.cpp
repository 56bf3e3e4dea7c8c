#include "sqc/cones.hpp"
#include "sqc/errors.hpp"
#include "sqc/probe.hpp"
#include "sqc/sphere.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>

namespace sqc {

namespace {

constexpr double kAgreement = 1e-6;

std::vector<Vector> seeded_starts(int n, int starts, std::uint64_t seed) {
  std::vector<Vector> out;
  out.reserve(static_cast<std::size_t>(starts));
  for (int s = 0; s < starts; ++s) {
    Matrix col(n, 1);
    sample_orthant_columns(n, derive_seed(seed, static_cast<std::uint64_t>(s)), col);
    out.emplace_back(col.col(0));
  }
  return out;
}

std::vector<MinResult> run_starts(const SymMatrix &a,
                                  const std::vector<Vector> &starts,
                                  const MinimizeConfig &cfg, Exec exec) {
  std::vector<MinResult> out(starts.size());
  const auto count = static_cast<int>(starts.size());
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
    for (int s = 0; s < count; ++s)
      out[static_cast<std::size_t>(s)] =
          geodesic_descent(a, starts[static_cast<std::size_t>(s)], cfg);
  } else {
    for (int s = 0; s < count; ++s)
      out[static_cast<std::size_t>(s)] =
          geodesic_descent(a, starts[static_cast<std::size_t>(s)], cfg);
  }
  return out;
}

} // namespace

MinResult geodesic_descent(const SymMatrix &a, const Vector &start,
                           const MinimizeConfig &cfg,
                           std::vector<double> *history) {
  if (start.size() != a.dim())
    throw InputError("descent start has the wrong dimension");
  Vector x = start.cwiseMax(0.0);
  if (!(x.norm() > 0.0))
    throw InputError("descent start must be a nonzero orthant point");
  x.normalize();

  const Matrix &m = a.matrix();
  double value = x.dot(m * x);
  if (history)
    history->push_back(value);

  double eta = 0.5 / a.scale();
  const double eta_max = 1e3 / a.scale();
  int iterations = 0;
  for (; iterations < cfg.max_iterations; ++iterations) {
    const Vector ax = m * x;
    const Vector grad = 2.0 * (ax - value * x);
    if (!(grad.norm() > 0.0))
      break;

    bool accepted = false;
    Vector next;
    double next_value = value;
    while (eta >= cfg.min_step) {
      next = (x - eta * grad).cwiseMax(0.0);
      const double norm = next.norm();
      if (norm > 0.0) {
        next /= norm;
        next_value = next.dot(m * next);
        if (next_value < value) {
          accepted = true;
          break;
        }
      }
      eta *= 0.5;
    }
    if (!accepted)
      break;

    const double step = (next - x).norm();
    x = std::move(next);
    value = next_value;
    if (history)
      history->push_back(value);
    eta = std::min(2.0 * eta, eta_max);
    if (step < cfg.step_tol) {
      ++iterations;
      break;
    }
  }

  MinResult r;
  r.value = value;
  r.argmin = x;
  r.method = MinMethod::GeodesicDescent;
  r.iterations = iterations;
  r.boundary = x.minCoeff() <= 0.0;
  return r;
}

MinResult minimize_orthant(const SymMatrix &a, const MinimizeConfig &cfg) {
  if (a.dim() <= cfg.max_exact_dim && !cfg.force_descent) {
    ParetoOptions po;
    po.max_exact_dim = cfg.max_exact_dim;
    po.exec = cfg.exec;
    const ParetoSpectrum spec = pareto_spectrum(a, po);
    const ParetoEigenpair &p = spec.pairs.front();
    MinResult r;
    r.value = spec.min_value;
    r.argmin = p.vector;
    r.method = MinMethod::ExactPareto;
    r.iterations = 0;
    r.boundary = static_cast<int>(p.support.size()) < a.dim();
    return r;
  }

  if (cfg.starts < 1)
    throw InputError("minimize needs at least one descent start");
  const auto runs =
      run_starts(a, seeded_starts(a.dim(), cfg.starts, cfg.seed), cfg, cfg.exec);
  std::size_t best = 0;
  for (std::size_t s = 1; s < runs.size(); ++s)
    if (runs[s].value < runs[best].value)
      best = s;
  return runs[best];
}

LocalGlobalReport local_global_report(const SymMatrix &a, int starts,
                                      std::uint64_t seed, Exec exec) {
  if (starts < 1)
    throw InputError("local_global_check needs at least one start");
  MinimizeConfig cfg;
  cfg.seed = seed;
  const auto runs = run_starts(a, seeded_starts(a.dim(), starts, seed), cfg, exec);

  LocalGlobalReport rep;
  rep.best = runs.front().value;
  for (const auto &r : runs) {
    rep.values.push_back(r.value);
    rep.boundary.push_back(r.boundary);
    rep.best = std::min(rep.best, r.value);
  }
  rep.consistent = std::all_of(rep.values.begin(), rep.values.end(),
                               [&](double v) { return v - rep.best <= kAgreement; });
  return rep;
}

bool local_global_check(const SymMatrix &a, const Verdict &verdict, int starts,
                        std::uint64_t seed) {
  if (verdict.status != Status::CertifiedQuasiconvex)
    throw InputError("local_global_check requires a CertifiedQuasiconvex verdict");
  return local_global_report(a, starts, seed).consistent;
}

} // namespace sqc
