#include "sqc/cones.hpp"

#include <omp.h>

#include <exception>

namespace sqc::kernels {

std::vector<ParetoEigenpair> support_candidates(const SymMatrix &a,
                                                std::uint32_t mask,
                                                const ParetoOptions &opt) {
  const int n = a.dim();
  std::vector<int> idx;
  for (int i = 0; i < n; ++i)
    if (mask & (1u << i))
      idx.push_back(i);

  const EigenSystem sub = eigen_decompose(a.principal(idx));
  const auto k = static_cast<Eigen::Index>(idx.size());

  std::vector<ParetoEigenpair> out;
  for (Eigen::Index c = 0; c < k; ++c) {
    Vector u = sub.vectors.col(c);
    if (u.minCoeff() < -opt.sign_tol) {
      u = -u;
      if (u.minCoeff() < -opt.sign_tol)
        continue;
    }
    if (u.minCoeff() <= opt.positivity_floor)
      continue; // boundary vector; covered by a smaller support

    const double lambda = sub.values(c);
    Vector x = Vector::Zero(n);
    for (Eigen::Index r = 0; r < k; ++r)
      x(idx[static_cast<std::size_t>(r)]) = u(r);

    bool complementary = true;
    for (int i = 0; i < n && complementary; ++i) {
      if (mask & (1u << i))
        continue;
      if (a.matrix().row(i).dot(x) < -opt.complementarity_tol)
        complementary = false;
    }
    if (!complementary)
      continue;
    out.push_back(ParetoEigenpair{lambda, std::move(x), idx});
  }
  return out;
}

std::vector<ParetoEigenpair> enumerate_supports_serial(const SymMatrix &a,
                                                       const ParetoOptions &opt) {
  const std::uint32_t count = (1u << a.dim()) - 1u;
  std::vector<ParetoEigenpair> out;
  for (std::uint32_t mask = 1; mask <= count; ++mask) {
    auto part = support_candidates(a, mask, opt);
    for (auto &p : part)
      out.push_back(std::move(p));
  }
  return out;
}

std::vector<ParetoEigenpair> enumerate_supports_parallel(const SymMatrix &a,
                                                         const ParetoOptions &opt) {
  const std::uint32_t count = (1u << a.dim()) - 1u;
  std::vector<std::vector<ParetoEigenpair>> slots(count);
  const auto total = static_cast<std::int64_t>(count);

  // Exceptions cannot leave an OpenMP region; capture the first one.
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t s = 0; s < total; ++s) {
    try {
      slots[static_cast<std::size_t>(s)] =
          support_candidates(a, static_cast<std::uint32_t>(s + 1), opt);
    } catch (...) {
#pragma omp critical(sqc_pareto_failure)
      if (!failure)
        failure = std::current_exception();
    }
  }
  if (failure)
    std::rethrow_exception(failure);

  std::vector<ParetoEigenpair> out;
  for (auto &slot : slots)
    for (auto &p : slot)
      out.push_back(std::move(p));
  return out;
}

} // namespace sqc::kernels
