#pragma once

#include "sqc/linalg.hpp"

#include <array>
#include <string_view>
#include <variant>

namespace sqc {

/// Points x, y of the closed orthant patch with
/// <Ax, y> - <x, y> max{q_A(x), q_A(y)} = margin > 0.
struct PairViolation {
  Vector x;
  Vector y;
  double margin = 0.0;
};

/// x, y >= 0 with <A_c x, x> <= 0, <A_c y, y> <= 0 and
/// <A_c (x + y), x + y> = margin > 0, where A_c = A - cI. The sublevel cone of
/// q_A at level c is then not convex.
struct ConeNonconvexity {
  double shift = 0.0;
  Vector x;
  Vector y;
  double margin = 0.0;
};

/// A positive off-diagonal entry a_ij.
struct ZViolation {
  int i = 0;
  int j = 0;
  double entry = 0.0;
};

/// Three orthonormal nonnegative eigenvectors, eigenvalues ascending with the
/// last strictly above the other two, plus the cone triple derived from them.
struct ThreeNonnegEigenvectors {
  std::array<Vector, 3> vectors;
  std::array<double, 3> values{};
  ConeNonconvexity cone;
};

using Witness =
    std::variant<PairViolation, ConeNonconvexity, ZViolation, ThreeNonnegEigenvectors>;

std::string_view witness_kind(const Witness &w);

struct WitnessTolerances {
  double margin = 1e-8;     // violation must exceed this
  double sublevel = 1e-10;  // <A_c x, x> allowed above zero
  double orthant = 1e-12;   // negative slack on coordinates
  double z_entry = 1e-10;   // ZViolation threshold
  double eigen = 1e-8;      // eigen-equation residual (relative to scale)
  double orthonormal = 1e-9;
};

/// Re-evaluate every inequality the witness claims, by direct arithmetic on A.
bool verify_witness(const SymMatrix &a, const Witness &w,
                    const WitnessTolerances &tol = {});

/// Pair margin <Ax, y> - <x, y> max{q_A(x), q_A(y)} for unit x, y in
/// the closed orthant. Throws InputError for points outside it.
double check_prop8b(const SymMatrix &a, const Vector &x, const Vector &y);

/// Unchecked margin used by the sampling kernels.
double pair_margin(const SymMatrix &a, const Vector &x, const Vector &y);

/// <A_c z, z> with A_c = A - cI.
double shifted_form(const SymMatrix &a, double c, const Vector &z);

/// Cone witness for a diagonal matrix that does not have exactly two
/// eigenvalue clusters with a simple smallest one. `diag` holds the diagonal
/// entries in coordinate order; `cluster_tol` merges equal eigenvalues.
/// Throws std::logic_error when the matrix satisfies the characterization.
ConeNonconvexity construct_diag_witness(std::span<const double> diag,
                                        double cluster_tol);

/// Cone witness from three orthonormal nonnegative eigenvectors whose
/// eigenvalues (any order) have the largest strictly above the other two.
ConeNonconvexity construct_threevec_witness(const std::array<Vector, 3> &vectors,
                                            const std::array<double, 3> &values,
                                            double cluster_tol = 1e-8);

} // namespace sqc
