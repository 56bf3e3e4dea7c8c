#pragma once

#include "sqc/linalg.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace sqc::genex {

/// A = V diag(lambda, mu, ..., mu, nu) V^T for lambda < mu < nu. V must be
/// orthogonal with v^1 - sqrt((nu-mu)/(mu-lambda)) |v^n| >= 0. The default V
/// has v^1 = (e^1 + e^n)/sqrt2, v^n = (e^1 - e^n)/sqrt2 and v^j = e^j.
SymMatrix make_ciqc(int n, double lambda, double mu, double nu,
                    const std::optional<Matrix> &basis = std::nullopt);

/// The default basis used by make_ciqc.
Matrix ciqc_basis(int n);

/// A = V diag(eigenvalues) V^T with lambda_1 < lambda_2 <= ... <= lambda_n.
/// With the default basis the bound
///   lambda_n < lambda_2 + (lambda_2 - lambda_1) / (n (n - 2))
/// is enforced. A custom V needs a positive first column and satisfies
///   lambda_n <= lambda_2 + alpha^2 / (n - 2) (lambda_2 - lambda_1),
/// alpha = min_i v^1_i.
SymMatrix make_engfm(const std::vector<double> &eigenvalues,
                     const std::optional<Matrix> &basis = std::nullopt);

/// v^1 = 1/sqrt(n) sum e^i and
/// v^j = (e^1 - (n+1-j) e^j + sum_{i>j} e^i) / sqrt((n+1-j) + (n+1-j)^2).
Matrix engfm_basis(int n);

/// H = I - 2 v v^T / ||v||^2 for nonnegative nonzero v.
SymMatrix make_householder(const Vector &v);

/// diag(lambda, mu, ..., mu) with lambda < mu.
SymMatrix make_diag_two_eig(int n, double lambda, double mu);

/// Random symmetric A with -A entrywise positive, a simple smallest
/// eigenvalue and lambda_2 > 0 (shifting by a multiple of I when needed).
/// Draws that lose entrywise negativity are rejected; throws NumericalError
/// after 100 rejections.
SymMatrix make_negative_positive(int n, std::uint64_t seed);

enum class Family { CiqcFamily, EngfmFamily, Householder, DiagonalTwoEig, NegativePositive };

std::string_view to_string(Family f);
/// Accepts the names used by the CLI: ciqc, engfm, householder, diag-two-eig,
/// negative-positive.
std::optional<Family> parse_family(std::string_view name);

struct FamilySpec {
  Family family = Family::Householder;
  int n = 3;
  /// ciqc: {lambda, mu, nu}; engfm: eigenvalues; householder: v;
  /// diag-two-eig: {lambda, mu}; negative-positive: unused.
  std::vector<double> params;
  std::optional<std::uint64_t> seed;
};

/// Checks the parameters and builds the instance.
SymMatrix build(const FamilySpec &spec);

/// A random valid parameter draw for `family` (n in 3..8), deterministic in
/// `seed`.
FamilySpec draw_family(Family family, std::uint64_t seed);

} // namespace sqc::genex
