#pragma once

#include "sqc/exec.hpp"
#include "sqc/linalg.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace sqc {

/// All off-diagonal entries <= tol.
bool is_z_matrix(const SymMatrix &a, double tol = 1e-10);

/// Connectivity of the graph with an edge i-j whenever |a_ij| > 1e-12.
bool is_irreducible(const SymMatrix &a);

struct PerronPair {
  double value = 0.0;
  Vector vector; // unit, componentwise >= 0
};

/// Dominant eigenpair of an entrywise nonnegative matrix.
PerronPair perron_pair(const SymMatrix &a);

/// A Pareto eigenpair: x >= 0 unit, strictly positive exactly on `support`,
/// with (Ax - lambda x)_i = 0 on the support and >= 0 off it.
struct ParetoEigenpair {
  double value = 0.0;
  Vector vector;
  std::vector<int> support;
};

struct ParetoSpectrum {
  std::vector<ParetoEigenpair> pairs; // ascending by value
  double min_value = 0.0;
  bool exact = false;
};

struct ParetoOptions {
  int max_exact_dim = 16;
  double complementarity_tol = 1e-9;
  double sign_tol = 1e-10;
  double positivity_floor = 1e-12;
  double dedup_value_tol = 1e-9;
  double dedup_vector_tol = 1e-7;
  double copositive_tol = 1e-9;
  Exec exec = Exec::Parallel;
};

/// Pareto spectrum by enumerating all 2^n - 1 supports. Throws InputError
/// when n exceeds max_exact_dim.
ParetoSpectrum pareto_spectrum(const SymMatrix &a, const ParetoOptions &opt = {});

/// min Pareto eigenvalue >= -copositive_tol.
bool is_copositive(const SymMatrix &a, const ParetoOptions &opt = {});

using VectorPair = std::pair<Vector, Vector>;

/// <Ax, y> <= 1e-9 for every supplied complementary pair (x, y >= 0,
/// <x, y> <= 1e-10). Throws InputError on a pair outside that set.
bool check_KZ_property(const SymMatrix &a, const std::vector<VectorPair> &pairs);

/// {(e_i, e_j) : i != j}; with these pairs check_KZ_property equals the
/// Z-matrix test.
std::vector<VectorPair> canonical_complementary_pairs(int n);

namespace kernels {

/// Candidate Pareto pairs contributed by a single support mask, before
/// deduplication. Exposed for the serial/parallel kernel tests.
std::vector<ParetoEigenpair> support_candidates(const SymMatrix &a,
                                                std::uint32_t mask,
                                                const ParetoOptions &opt);

/// Concatenation of support_candidates over masks 1 .. 2^n - 1 in mask order.
std::vector<ParetoEigenpair> enumerate_supports_serial(const SymMatrix &a,
                                                       const ParetoOptions &opt);
std::vector<ParetoEigenpair> enumerate_supports_parallel(const SymMatrix &a,
                                                         const ParetoOptions &opt);

} // namespace kernels

} // namespace sqc
