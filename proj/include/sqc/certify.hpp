#pragma once

#include "sqc/cones.hpp"
#include "sqc/exec.hpp"
#include "sqc/linalg.hpp"
#include "sqc/witness.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace sqc {

enum class Rule {
  ConstantForm,
  TwoEigenvalueCharacterization,
  CopositiveSufficiency,
  ZMatrixFastPathV,
  ZMatrixFastPathVI,
  NegativePositiveMatrix,
};

/// Re-checkable evidence for a quasi-convexity verdict.
struct Certificate {
  Rule rule = Rule::ConstantForm;
  /// Eigenvalues the rule relies on: {lambda} for ConstantForm, otherwise
  /// {lambda_1, lambda_2} (smallest and next distinct eigenvalue).
  std::vector<double> eigenvalues;
  /// Unit eigenvector of lambda_1 inside the nonnegative orthant (empty for
  /// ConstantForm).
  Vector eigenvector;
  /// Pareto spectrum of lambda_2 I - A (CopositiveSufficiency only).
  std::optional<ParetoSpectrum> shifted_spectrum;
  bool irreducible = false;
};

enum class Status { CertifiedQuasiconvex, CertifiedNotQuasiconvex, Unknown };

/// The step of the decision procedure that produced the verdict.
enum class Step {
  ConstantForm,
  ZNecessity,
  DiagonalCharacterization,
  TwoEigenvalueCharacterization,
  CopositiveSufficiency,
  ZMatrixFastPath,
  ThreeEigenvectorObstruction,
  Probe,
};

struct ProbeReport {
  std::int64_t samples_used = 0;
  double best_margin = 0.0;
  std::optional<Witness> witness;
  std::uint64_t seed = 0;
};

struct Verdict {
  Status status = Status::Unknown;
  Step step = Step::Probe;
  std::optional<Certificate> certificate;
  std::optional<Witness> witness;
  std::optional<ProbeReport> probe_summary;
};

struct CertifyConfig {
  double tol_margin = 1e-8;
  double tol_sign = 1e-10;
  double tol_z = 1e-10;
  /// Eigenvalue clustering tolerance; default 1e-8 max(1, ||A||_F).
  std::optional<double> cluster_tol;
  int max_exact_dim = 16;
  std::int64_t samples = 100000;
  std::uint64_t seed = 0;
  Exec exec = Exec::Parallel;

  ParetoOptions pareto() const;
};

/// Decide spherical quasi-convexity of q_A on the spherical positive orthant.
/// The answer is sound in both directions; Unknown is returned when no
/// sufficient condition applies and sampling finds no violation. Requires n >= 2.
Verdict certify(const SymMatrix &a, const CertifyConfig &config = {});

/// Re-check a certificate's payload against A.
bool verify_certificate(const SymMatrix &a, const Certificate &c,
                        const CertifyConfig &config = {});

std::string_view to_string(Rule r);
std::string_view to_string(Status s);
std::string_view to_string(Step s);

} // namespace sqc
