#include "sqc/certify.hpp"

#include "sqc/errors.hpp"
#include "sqc/probe.hpp"

#include <algorithm>
#include <cmath>

namespace sqc {

ParetoOptions CertifyConfig::pareto() const {
  ParetoOptions po;
  po.max_exact_dim = max_exact_dim;
  po.sign_tol = tol_sign;
  po.exec = exec;
  return po;
}

namespace {

// Returns v or -v when one of them lies in the nonnegative orthant.
std::optional<Vector> orthant_orientation(const Vector &v, double tol) {
  if (v.minCoeff() >= -tol)
    return v;
  if ((-v).minCoeff() >= -tol)
    return Vector(-v);
  return std::nullopt;
}

Verdict yes(Step step, Certificate cert) {
  Verdict v;
  v.status = Status::CertifiedQuasiconvex;
  v.step = step;
  v.certificate = std::move(cert);
  return v;
}

Verdict no(Step step, Witness w) {
  Verdict v;
  v.status = Status::CertifiedNotQuasiconvex;
  v.step = step;
  v.witness = std::move(w);
  return v;
}

Verdict from_probe(const SymMatrix &a, const CertifyConfig &cfg, Step step) {
  ProbeOptions po;
  po.tol_margin = cfg.tol_margin;
  po.exec = cfg.exec;
  ProbeReport rep = falsify(a, std::max<std::int64_t>(1, cfg.samples), cfg.seed, po);
  Verdict v;
  v.step = step;
  if (rep.witness) {
    v.status = Status::CertifiedNotQuasiconvex;
    v.witness = rep.witness;
  } else {
    v.status = Status::Unknown;
  }
  v.probe_summary = std::move(rep);
  return v;
}

WitnessTolerances witness_tol(const CertifyConfig &cfg) {
  WitnessTolerances t;
  t.margin = cfg.tol_margin;
  t.z_entry = cfg.tol_z;
  return t;
}

struct NonnegEigenvector {
  Vector vector;
  double value;
  int cluster;
};

std::optional<ThreeNonnegEigenvectors>
three_vector_obstruction(const SymMatrix &a, const EigenSystem &e,
                         const EigenStructure &s, const CertifyConfig &cfg,
                         double cluster_tol) {
  std::vector<NonnegEigenvector> cand;
  for (int ci = 0; ci < s.distinct_count(); ++ci) {
    const EigenCluster &c = s.clusters[static_cast<std::size_t>(ci)];
    for (int k = c.first; k < c.first + c.multiplicity; ++k)
      if (auto v = orthant_orientation(e.vectors.col(k), cfg.tol_sign))
        cand.push_back({v->cwiseMax(0.0), e.values(k), ci});
  }
  // Need two candidates strictly below a third in the cluster order.
  for (auto top = cand.rbegin(); top != cand.rend(); ++top) {
    std::vector<const NonnegEigenvector *> lower;
    for (const auto &c : cand)
      if (c.cluster < top->cluster && lower.size() < 2)
        lower.push_back(&c);
    if (lower.size() < 2)
      continue;

    ThreeNonnegEigenvectors w;
    w.vectors = {lower[0]->vector, lower[1]->vector, top->vector};
    w.values = {lower[0]->value, lower[1]->value, top->value};
    try {
      w.cone = construct_threevec_witness(w.vectors, w.values, cluster_tol);
    } catch (const InputError &) {
      continue;
    }
    w.cone.margin = shifted_form(a, w.cone.shift, w.cone.x + w.cone.y);
    if (verify_witness(a, w, witness_tol(cfg)))
      return w;
  }
  return std::nullopt;
}

} // namespace

Verdict certify(const SymMatrix &a, const CertifyConfig &cfg) {
  const int n = a.dim();
  if (n < 2)
    throw InputError("certify requires n >= 2 (got n = " + std::to_string(n) + ")");

  const EigenSystem e = eigen_decompose(a);
  const double ctol = cfg.cluster_tol.value_or(default_cluster_tol(a));
  const EigenStructure s = cluster_eigenvalues(e, ctol);

  // Constant form: q_A is constant on the sphere.
  if (s.distinct_count() == 1) {
    Certificate c;
    c.rule = Rule::ConstantForm;
    c.eigenvalues = {s.clusters.front().value};
    return yes(Step::ConstantForm, std::move(c));
  }

  // Z-necessity: a positive a_ij gives a pair violation at (e_i, e_j).
  {
    int bi = 0, bj = 1;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (a(i, j) > a(bi, bj)) {
          bi = i;
          bj = j;
        }
    const double entry = a(bi, bj);
    if (entry > cfg.tol_z) {
      if (entry > cfg.tol_margin)
        return no(Step::ZNecessity,
                  PairViolation{Vector::Unit(n, bi), Vector::Unit(n, bj), entry});
      return no(Step::ZNecessity, ZViolation{bi, bj, entry});
    }
  }

  const Vector v1 = e.vectors.col(0);
  const std::optional<Vector> v1_orthant = orthant_orientation(v1, cfg.tol_sign);
  const bool two_simple = s.distinct_count() == 2 && s.smallest_simple();

  // Diagonal characterization (valid up to the shift A + cI).
  if (is_diagonal(a, 1e-12 * a.scale())) {
    if (two_simple) {
      int imin = 0;
      a.matrix().diagonal().minCoeff(&imin);
      Certificate c;
      c.rule = Rule::TwoEigenvalueCharacterization;
      c.eigenvalues = {s.clusters[0].value, s.clusters[1].value};
      c.eigenvector = Vector::Unit(n, imin);
      return yes(Step::DiagonalCharacterization, std::move(c));
    }
    std::vector<double> diag(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      diag[static_cast<std::size_t>(i)] = a(i, i);
    ConeNonconvexity w = construct_diag_witness(diag, ctol);
    w.margin = shifted_form(a, w.shift, w.x + w.y);
    if (verify_witness(a, w, witness_tol(cfg)))
      return no(Step::DiagonalCharacterization, std::move(w));
  }

  // Two eigenvalues, simple smallest: quasi-convex iff +-v1 is nonnegative.
  if (two_simple) {
    if (v1_orthant) {
      Certificate c;
      c.rule = Rule::TwoEigenvalueCharacterization;
      c.eigenvalues = {s.clusters[0].value, s.clusters[1].value};
      c.eigenvector = *v1_orthant;
      return yes(Step::TwoEigenvalueCharacterization, std::move(c));
    }
    return from_probe(a, cfg, Step::TwoEigenvalueCharacterization);
  }

  // Copositive sufficiency: simple lambda_1 with a nonnegative eigenvector and
  // lambda_2 I - A copositive.
  if (s.smallest_simple() && v1_orthant) {
    const double lambda1 = e.values(0);
    const double lambda2 = e.values(1);
    Certificate c;
    c.eigenvalues = {lambda1, lambda2};
    c.eigenvector = *v1_orthant;
    c.irreducible = is_irreducible(a);
    if (n <= cfg.max_exact_dim) {
      const ParetoOptions po = cfg.pareto();
      ParetoSpectrum spec = pareto_spectrum(a.scaled(-1.0).shifted(lambda2), po);
      if (spec.min_value >= -po.copositive_tol) {
        c.rule = Rule::CopositiveSufficiency;
        c.shifted_spectrum = std::move(spec);
        return yes(Step::CopositiveSufficiency, std::move(c));
      }
    } else {
      const double scale_tol = cfg.tol_sign * a.scale();
      if (a.matrix().maxCoeff() < 0.0 && lambda2 > 0.0) {
        c.rule = Rule::NegativePositiveMatrix;
        return yes(Step::ZMatrixFastPath, std::move(c));
      }
      if (lambda2 >= a.matrix().diagonal().maxCoeff() - scale_tol) {
        c.rule = c.irreducible ? Rule::ZMatrixFastPathVI : Rule::ZMatrixFastPathV;
        return yes(Step::ZMatrixFastPath, std::move(c));
      }
    }
  }

  // Three nonnegative eigenvectors, the top one above the other two.
  if (n >= 3)
    if (auto w = three_vector_obstruction(a, e, s, cfg, ctol))
      return no(Step::ThreeEigenvectorObstruction, std::move(*w));

  return from_probe(a, cfg, Step::Probe);
}

bool verify_certificate(const SymMatrix &a, const Certificate &c,
                        const CertifyConfig &cfg) {
  const EigenSystem e = eigen_decompose(a);
  const double ctol = cfg.cluster_tol.value_or(default_cluster_tol(a));
  const EigenStructure s = cluster_eigenvalues(e, ctol);
  const int n = a.dim();

  if (c.rule == Rule::ConstantForm)
    return s.distinct_count() == 1;

  if (c.eigenvalues.size() != 2 || c.eigenvector.size() != n)
    return false;
  const Vector &v = c.eigenvector;
  if (v.minCoeff() < -cfg.tol_sign || std::abs(v.norm() - 1.0) > 1e-9)
    return false;
  const double lambda1 = c.eigenvalues[0];
  const double lambda2 = c.eigenvalues[1];
  if ((a.matrix() * v - lambda1 * v).norm() > 1e-8 * a.scale())
    return false;
  if (!s.smallest_simple() || std::abs(lambda1 - e.values(0)) > ctol ||
      std::abs(lambda2 - e.values(1)) > ctol)
    return false;

  switch (c.rule) {
  case Rule::ConstantForm:
    return false;
  case Rule::TwoEigenvalueCharacterization:
    return s.distinct_count() == 2;
  case Rule::CopositiveSufficiency: {
    if (!c.shifted_spectrum || c.shifted_spectrum->min_value < -1e-9)
      return false;
    if (n <= cfg.max_exact_dim)
      return is_copositive(a.scaled(-1.0).shifted(lambda2), cfg.pareto());
    return true;
  }
  case Rule::ZMatrixFastPathV:
  case Rule::ZMatrixFastPathVI:
    if (!is_z_matrix(a, cfg.tol_z) ||
        lambda2 < a.matrix().diagonal().maxCoeff() - cfg.tol_sign * a.scale())
      return false;
    return c.rule == Rule::ZMatrixFastPathV || is_irreducible(a);
  case Rule::NegativePositiveMatrix:
    return a.matrix().maxCoeff() < 0.0 && lambda2 > 0.0;
  }
  return false;
}

std::string_view to_string(Rule r) {
  switch (r) {
  case Rule::ConstantForm:
    return "ConstantForm";
  case Rule::TwoEigenvalueCharacterization:
    return "TwoEigenvalueCharacterization";
  case Rule::CopositiveSufficiency:
    return "CopositiveSufficiency";
  case Rule::ZMatrixFastPathV:
    return "ZMatrixFastPathV";
  case Rule::ZMatrixFastPathVI:
    return "ZMatrixFastPathVI";
  case Rule::NegativePositiveMatrix:
    return "NegativePositiveMatrix";
  }
  return "?";
}

std::string_view to_string(Status s) {
  switch (s) {
  case Status::CertifiedQuasiconvex:
    return "CertifiedQuasiconvex";
  case Status::CertifiedNotQuasiconvex:
    return "CertifiedNotQuasiconvex";
  case Status::Unknown:
    return "Unknown";
  }
  return "?";
}

std::string_view to_string(Step s) {
  switch (s) {
  case Step::ConstantForm:
    return "ConstantForm";
  case Step::ZNecessity:
    return "ZNecessity";
  case Step::DiagonalCharacterization:
    return "DiagonalCharacterization";
  case Step::TwoEigenvalueCharacterization:
    return "TwoEigenvalueCharacterization";
  case Step::CopositiveSufficiency:
    return "CopositiveSufficiency";
  case Step::ZMatrixFastPath:
    return "ZMatrixFastPath";
  case Step::ThreeEigenvectorObstruction:
    return "ThreeEigenvectorObstruction";
  case Step::Probe:
    return "Probe";
  }
  return "?";
}

} // namespace sqc
