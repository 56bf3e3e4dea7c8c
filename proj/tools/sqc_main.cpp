// sqc: spherical quasi-convexity of quadratic forms on the positive orthant.
//
// Exit codes: 0 command completed (whatever the verdict), 2 input or
// parameter error, 3 internal numerical failure.

#include "sqc/certify.hpp"
#include "sqc/cones.hpp"
#include "sqc/errors.hpp"
#include "sqc/genex.hpp"
#include "sqc/matrix_io.hpp"
#include "sqc/probe.hpp"
#include "sqc/report.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 2;
constexpr int kNumericalError = 3;

struct Flags {
  double tol_margin = 1e-8;
  double tol_sign = 1e-10;
  int max_exact_dim = 16;
  std::int64_t samples = 100000;
  std::uint64_t seed = 0;
  std::string format = "text";
  std::string out;
  int starts = 8;
};

struct GenerateArgs {
  std::string family;
  std::optional<int> n;
  std::optional<double> lambda, mu, nu;
  std::vector<double> eigenvalues;
  std::vector<double> v;
  bool random = false;
  std::string name;
};

void emit(const Flags &f, const std::string &text) {
  if (f.out.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream os(f.out);
  if (!os)
    throw sqc::InputError("cannot write '" + f.out + "'");
  os << text;
}

sqc::report::ConfigEcho echo(const Flags &f) {
  return {f.tol_margin, f.tol_sign, f.max_exact_dim, f.samples, f.seed};
}

void emit_report(const Flags &f, const std::string &command,
                 const sqc::MatrixDocument &doc, sqc::report::json payload) {
  const auto rep = sqc::report::make_report(command, sqc::document_digest(doc),
                                            std::move(payload), echo(f));
  emit(f, f.format == "structured" ? sqc::report::render_structured(rep)
                                   : sqc::report::render_text(rep));
}

sqc::SymMatrix load(const std::string &path, sqc::MatrixDocument &doc) {
  doc = sqc::read_matrix_document(path);
  return sqc::to_symmatrix(doc);
}

sqc::CertifyConfig certify_config(const Flags &f) {
  sqc::CertifyConfig c;
  c.tol_margin = f.tol_margin;
  c.tol_sign = f.tol_sign;
  c.max_exact_dim = f.max_exact_dim;
  c.samples = f.samples;
  c.seed = f.seed;
  return c;
}

int cmd_analyze(const Flags &f, const std::string &path) {
  sqc::MatrixDocument doc;
  const auto a = load(path, doc);
  const auto verdict = sqc::certify(a, certify_config(f));
  emit_report(f, "analyze", doc, sqc::report::to_json(verdict));
  return kOk;
}

int cmd_pareto(const Flags &f, const std::string &path) {
  sqc::MatrixDocument doc;
  const auto a = load(path, doc);
  const auto spec = sqc::pareto_spectrum(a, certify_config(f).pareto());
  emit_report(f, "pareto", doc, sqc::report::to_json(spec));
  return kOk;
}

int cmd_copositive(const Flags &f, const std::string &path) {
  sqc::MatrixDocument doc;
  const auto a = load(path, doc);
  const auto po = certify_config(f).pareto();
  const auto spec = sqc::pareto_spectrum(a, po);
  sqc::report::json payload;
  payload["copositive"] = spec.min_value >= -po.copositive_tol;
  payload["min_pareto_eigenvalue"] = spec.min_value;
  emit_report(f, "copositive", doc, payload);
  return kOk;
}

int cmd_minimize(const Flags &f, const std::string &path) {
  sqc::MatrixDocument doc;
  const auto a = load(path, doc);
  sqc::MinimizeConfig mc;
  mc.max_exact_dim = f.max_exact_dim;
  mc.starts = f.starts;
  mc.seed = f.seed;
  emit_report(f, "minimize", doc, sqc::report::to_json(sqc::minimize_orthant(a, mc)));
  return kOk;
}

int cmd_probe(const Flags &f, const std::string &path) {
  sqc::MatrixDocument doc;
  const auto a = load(path, doc);
  if (f.samples < 1)
    throw sqc::InputError("--samples must be positive");
  sqc::ProbeOptions po;
  po.tol_margin = f.tol_margin;
  emit_report(f, "probe", doc, sqc::report::to_json(sqc::falsify(a, f.samples, f.seed, po)));
  return kOk;
}

int cmd_generate(const Flags &f, const GenerateArgs &g) {
  using namespace sqc::genex;
  const auto family = parse_family(g.family);
  if (!family)
    throw sqc::InputError("unknown family '" + g.family +
                          "' (ciqc, engfm, householder, diag-two-eig, negative-positive)");
  FamilySpec spec;
  if (g.random) {
    spec = draw_family(*family, f.seed);
  } else {
    spec.family = *family;
    spec.seed = f.seed;
    switch (*family) {
    case Family::CiqcFamily:
      spec.n = g.n.value_or(3);
      spec.params = {g.lambda.value_or(0.0), g.mu.value_or(3.0), g.nu.value_or(4.0)};
      break;
    case Family::EngfmFamily:
      spec.params = g.eigenvalues.empty() ? std::vector<double>{0.0, 3.0, 3.3}
                                          : g.eigenvalues;
      spec.n = static_cast<int>(spec.params.size());
      if (g.n && *g.n != spec.n)
        throw sqc::InputError("--n disagrees with the number of --eigenvalues");
      break;
    case Family::Householder:
      spec.n = g.v.empty() ? g.n.value_or(3) : static_cast<int>(g.v.size());
      spec.params = g.v.empty() ? std::vector<double>(static_cast<std::size_t>(spec.n), 1.0)
                                : g.v;
      if (g.n && *g.n != spec.n)
        throw sqc::InputError("--n disagrees with the length of --v");
      break;
    case Family::DiagonalTwoEig:
      spec.n = g.n.value_or(3);
      spec.params = {g.lambda.value_or(-1.0), g.mu.value_or(1.0)};
      break;
    case Family::NegativePositive:
      spec.n = g.n.value_or(3);
      break;
    }
  }
  const auto a = build(spec);
  emit(f, sqc::format_matrix_document(
              sqc::to_document(a, g.name.empty() ? std::string(to_string(*family)) : g.name)));
  return kOk;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Spherical quasi-convexity analysis of quadratic forms"};
  app.require_subcommand(1);
  app.fallthrough();

  Flags f;
  app.add_option("--tol-margin", f.tol_margin, "Violation margin tolerance")
      ->check(CLI::PositiveNumber);
  app.add_option("--tol-sign", f.tol_sign, "Sign tolerance")->check(CLI::NonNegativeNumber);
  app.add_option("--max-exact-dim", f.max_exact_dim, "Largest n for exact Pareto enumeration")
      ->check(CLI::Range(1, 30));
  app.add_option("--samples", f.samples, "Probe sample pairs")->check(CLI::PositiveNumber);
  app.add_option("--seed", f.seed, "Random seed");
  app.add_option("--format", f.format, "Output format")
      ->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--out", f.out, "Write output to this file");

  std::string path;
  std::string which;
  auto matrix_cmd = [&](const char *name, const char *help) {
    auto *sub = app.add_subcommand(name, help);
    sub->add_option("matrix", path, "Matrix document")->required();
    sub->callback([&which, name] { which = name; });
    return sub;
  };
  matrix_cmd("analyze", "Certify or refute spherical quasi-convexity");
  matrix_cmd("pareto", "List Pareto eigenpairs");
  matrix_cmd("copositive", "Decide copositivity");
  matrix_cmd("minimize", "Minimize q_A over the spherical orthant")
      ->add_option("--starts", f.starts, "Descent starts")
      ->check(CLI::PositiveNumber);
  matrix_cmd("probe", "Seeded search for a violation");

  GenerateArgs g;
  auto *gen = app.add_subcommand("generate", "Write a certified example matrix");
  gen->add_option("family", g.family, "ciqc | engfm | householder | diag-two-eig | negative-positive")
      ->required();
  gen->add_option("--n", g.n, "Dimension");
  gen->add_option("--lambda", g.lambda);
  gen->add_option("--mu", g.mu);
  gen->add_option("--nu", g.nu);
  gen->add_option("--eigenvalues", g.eigenvalues)->delimiter(',');
  gen->add_option("--v", g.v)->delimiter(',');
  gen->add_flag("--random", g.random, "Draw random valid parameters from --seed");
  gen->add_option("--name", g.name);
  gen->callback([&which] { which = "generate"; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (which == "analyze")
      return cmd_analyze(f, path);
    if (which == "pareto")
      return cmd_pareto(f, path);
    if (which == "copositive")
      return cmd_copositive(f, path);
    if (which == "minimize")
      return cmd_minimize(f, path);
    if (which == "probe")
      return cmd_probe(f, path);
    if (which == "generate")
      return cmd_generate(f, g);
    std::cerr << "sqc: no command\n";
    return kInputError;
  } catch (const sqc::InputError &e) {
    std::cerr << "sqc: input error: " << e.what() << "\n";
    return kInputError;
  } catch (const sqc::NumericalError &e) {
    std::cerr << "sqc: numerical failure: " << e.what() << "\n";
    return kNumericalError;
  } catch (const std::exception &e) {
    std::cerr << "sqc: internal error: " << e.what() << "\n";
    return kNumericalError;
  }
}
