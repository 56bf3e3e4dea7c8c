#pragma once

#include <Eigen/Dense>

#include <span>
#include <vector>

namespace sqc {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Dense symmetric matrix with finite entries. The input is symmetrized as
/// (A + A^T)/2; asymmetry beyond `asym_tol * max(1, max|a_ij|)` is rejected.
class SymMatrix {
public:
  explicit SymMatrix(const Matrix &entries, double asym_tol = 1e-9);

  static SymMatrix from_rows(const std::vector<std::vector<double>> &rows,
                             double asym_tol = 1e-9);
  static SymMatrix diagonal(std::span<const double> diag);
  static SymMatrix identity(int n);

  int dim() const { return static_cast<int>(a_.rows()); }
  const Matrix &matrix() const { return a_; }
  double operator()(int i, int j) const { return a_(i, j); }

  double frobenius_norm() const { return a_.norm(); }
  /// max(1, ||A||_F); the scale used by relative tolerances.
  double scale() const;

  /// q_A(x) = <Ax, x>.
  double quadratic_form(const Vector &x) const { return x.dot(a_ * x); }
  double bilinear(const Vector &x, const Vector &y) const {
    return y.dot(a_ * x);
  }

  /// A + cI.
  SymMatrix shifted(double c) const;
  /// sA.
  SymMatrix scaled(double s) const;
  /// Principal submatrix on the given (sorted) index set.
  SymMatrix principal(std::span<const int> idx) const;

private:
  struct Trusted {};
  SymMatrix(Matrix entries, Trusted) : a_(std::move(entries)) {}

  Matrix a_;
};

/// Ascending eigenvalues with a column-orthonormal eigenvector matrix.
struct EigenSystem {
  Vector values;
  Matrix vectors;
  double residual = 0.0; // ||A - V diag(values) V^T||_F
  int sweeps = 0;
};

struct EigenCluster {
  double value = 0.0; // mean of the merged eigenvalues
  int multiplicity = 0;
  int first = 0; // index of the first member in EigenSystem::values
};

struct EigenStructure {
  std::vector<EigenCluster> clusters;

  int distinct_count() const { return static_cast<int>(clusters.size()); }
  bool smallest_simple() const {
    return !clusters.empty() && clusters.front().multiplicity == 1;
  }
};

/// Cyclic Jacobi eigendecomposition. Iterates until every off-diagonal
/// magnitude is <= 1e-12 ||A||_F; throws NumericalError after 100 sweeps.
/// Columns are sign-normalized so the entry of largest magnitude is >= 0.
EigenSystem eigen_decompose(const SymMatrix &a);

/// Default clustering tolerance 1e-8 * max(1, ||A||_F).
double default_cluster_tol(const SymMatrix &a);

/// Merge consecutive eigenvalues that lie within `tol` of their neighbour.
EigenStructure cluster_eigenvalues(const EigenSystem &e, double tol);

bool is_diagonal(const SymMatrix &a, double tol);

/// P^T A P where P e_i = e_{perm[i]}, i.e. the result has entries
/// A(perm[i], perm[j]). `perm` is 0-based.
SymMatrix permute_similarity(const SymMatrix &a, std::span<const int> perm);

} // namespace sqc
