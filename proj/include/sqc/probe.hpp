#pragma once

#include "sqc/certify.hpp"
#include "sqc/exec.hpp"
#include "sqc/linalg.hpp"

#include <cstdint>
#include <limits>
#include <vector>

namespace sqc {

struct ProbeOptions {
  double tol_margin = 1e-8;
  int refine_passes = 200;
  double refine_step = 0.1;
  int refine_starts = 256; // starts given screen_passes of refinement
  int screen_passes = 20;
  int final_starts = 8;     // best screened starts given refine_passes
  int face_pair_dim = 8;
  /// Samples are split into this many independently seeded chunks; the
  /// result does not depend on the thread count.
  int chunks = 64;
  Exec exec = Exec::Parallel;
};

/// Seeded search for a quasi-convexity violation on the spherical positive
/// orthant. Each sample pair is scored by the pair margin
/// <Ax,y> - <x,y> max(q(x), q(y)), the geodesic test over t = 1/8 .. 7/8 and
/// the sublevel-cone midpoint test. Pairs of face critical points (unit
/// nonnegative eigenvectors of principal submatrices) are scored as well when
/// n <= face_pair_dim. The best few candidates are refined by coordinate search.
ProbeReport falsify(const SymMatrix &a, std::int64_t samples, std::uint64_t seed,
                    const ProbeOptions &opt = {});

enum class MinMethod { ExactPareto, GeodesicDescent };

struct MinResult {
  double value = 0.0;
  Vector argmin;
  MinMethod method = MinMethod::ExactPareto;
  int iterations = 0;
  /// Descent ended with some coordinate clamped to zero.
  bool boundary = false;
};

struct MinimizeConfig {
  int max_exact_dim = 16;
  int starts = 8;
  std::uint64_t seed = 0;
  int max_iterations = 10000;
  double step_tol = 1e-10;
  double min_step = 1e-12;
  /// Force projected descent even when the exact path is available.
  bool force_descent = false;
  Exec exec = Exec::Parallel;
};

/// min q_A over S^{n-1} intersected with the nonnegative orthant: exact via
/// the Pareto spectrum when n <= max_exact_dim, otherwise multi-start
/// projected geodesic descent.
MinResult minimize_orthant(const SymMatrix &a, const MinimizeConfig &config = {});

/// One run of x <- normalize(max(0, x - eta grad q_A(x))) with backtracking.
/// `history`, when given, receives q_A after every accepted step (starting
/// with the value at `start`).
MinResult geodesic_descent(const SymMatrix &a, const Vector &start,
                           const MinimizeConfig &config = {},
                           std::vector<double> *history = nullptr);

struct LocalGlobalReport {
  std::vector<double> values; // one per start
  std::vector<bool> boundary;
  double best = 0.0;
  bool consistent = false; // all values within 1e-6 of best
};

LocalGlobalReport local_global_report(const SymMatrix &a, int starts,
                                      std::uint64_t seed, Exec exec = Exec::Parallel);

/// For a CertifiedQuasiconvex verdict: every descent run from `starts`
/// seeded interior points reaches the same value (within 1e-6).
bool local_global_check(const SymMatrix &a, const Verdict &verdict, int starts,
                        std::uint64_t seed);

namespace kernels {

enum class ProbeTest { Pair, Geodesic, Midpoint };

struct ProbeCandidate {
  double margin = -std::numeric_limits<double>::infinity();
  ProbeTest test = ProbeTest::Pair;
  Vector x;
  Vector y;
};

/// Best raw candidate over all chunks, merged in chunk order.
ProbeCandidate scan_serial(const SymMatrix &a, std::int64_t samples,
                           std::uint64_t seed, int chunks);
ProbeCandidate scan_parallel(const SymMatrix &a, std::int64_t samples,
                             std::uint64_t seed, int chunks);

/// Per-chunk best candidates, in chunk order.
std::vector<ProbeCandidate> scan_chunks_serial(const SymMatrix &a, std::int64_t samples,
                                               std::uint64_t seed, int chunks);
std::vector<ProbeCandidate> scan_chunks_parallel(const SymMatrix &a, std::int64_t samples,
                                                 std::uint64_t seed, int chunks);

/// The `keep` best pairs among `pts` (unit orthant points) by normalized
/// margin, best first.
std::vector<ProbeCandidate> best_pairs(const SymMatrix &a, const std::vector<Vector> &pts,
                                       std::size_t keep);

/// Scores one pair of unit orthant points with the three tests.
ProbeCandidate score(const SymMatrix &a, const Vector &x, const Vector &y);

} // namespace kernels

} // namespace sqc
