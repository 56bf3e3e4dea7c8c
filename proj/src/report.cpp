#include "sqc/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace sqc::report {

namespace {

json number(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

std::string format_scalar(const json &v) {
  if (v.is_number_float()) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v.get<double>());
    return buf;
  }
  if (v.is_string())
    return v.get<std::string>();
  return v.dump();
}

bool is_flat_array(const json &v) {
  if (!v.is_array())
    return false;
  for (const auto &x : v)
    if (x.is_structured())
      return false;
  return true;
}

void flatten(const json &v, const std::string &path, std::ostringstream &os) {
  if (v.is_object()) {
    for (const auto &[key, child] : v.items())
      flatten(child, path.empty() ? key : path + "." + key, os);
    return;
  }
  if (is_flat_array(v)) {
    os << path << ": [";
    bool first = true;
    for (const auto &x : v) {
      os << (first ? "" : ", ") << format_scalar(x);
      first = false;
    }
    os << "]\n";
    return;
  }
  if (v.is_array()) {
    std::size_t i = 0;
    for (const auto &x : v)
      flatten(x, path + "[" + std::to_string(i++) + "]", os);
    if (i == 0)
      os << path << ": []\n";
    return;
  }
  os << path << ": " << format_scalar(v) << "\n";
}

} // namespace

json to_json(const Vector &v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i)
    a.push_back(number(v(i)));
  return a;
}

json to_json(const Witness &w) {
  json j;
  j["kind"] = std::string(witness_kind(w));
  std::visit(
      [&](const auto &x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, PairViolation>) {
          j["x"] = to_json(x.x);
          j["y"] = to_json(x.y);
          j["margin"] = number(x.margin);
        } else if constexpr (std::is_same_v<T, ConeNonconvexity>) {
          j["shift"] = number(x.shift);
          j["x"] = to_json(x.x);
          j["y"] = to_json(x.y);
          j["margin"] = number(x.margin);
        } else if constexpr (std::is_same_v<T, ZViolation>) {
          j["i"] = x.i;
          j["j"] = x.j;
          j["entry"] = number(x.entry);
        } else {
          j["vectors"] = json::array();
          for (const auto &v : x.vectors)
            j["vectors"].push_back(to_json(v));
          j["values"] = json::array();
          for (double v : x.values)
            j["values"].push_back(number(v));
          json cone = to_json(Witness{x.cone});
          cone.erase("kind");
          j["cone"] = cone;
        }
      },
      w);
  return j;
}

json to_json(const ParetoSpectrum &s) {
  json j;
  j["exact"] = s.exact;
  j["min_value"] = number(s.min_value);
  j["pairs"] = json::array();
  for (const auto &p : s.pairs) {
    json e;
    e["value"] = number(p.value);
    e["vector"] = to_json(p.vector);
    e["support"] = p.support;
    j["pairs"].push_back(e);
  }
  return j;
}

json to_json(const Certificate &c) {
  json j;
  j["rule"] = std::string(to_string(c.rule));
  j["eigenvalues"] = json::array();
  for (double x : c.eigenvalues)
    j["eigenvalues"].push_back(number(x));
  j["eigenvector"] = to_json(c.eigenvector);
  j["irreducible"] = c.irreducible;
  if (c.shifted_spectrum)
    j["shifted_spectrum"] = to_json(*c.shifted_spectrum);
  return j;
}

json to_json(const ProbeReport &p) {
  json j;
  j["samples_used"] = p.samples_used;
  j["best_margin"] = number(p.best_margin);
  j["seed"] = p.seed;
  j["witness"] = p.witness ? to_json(*p.witness) : json(nullptr);
  return j;
}

json to_json(const Verdict &v) {
  json j;
  j["status"] = std::string(to_string(v.status));
  j["step"] = std::string(to_string(v.step));
  j["certificate"] = v.certificate ? to_json(*v.certificate) : json(nullptr);
  j["witness"] = v.witness ? to_json(*v.witness) : json(nullptr);
  j["probe"] = v.probe_summary ? to_json(*v.probe_summary) : json(nullptr);
  return j;
}

json to_json(const MinResult &m) {
  json j;
  j["value"] = number(m.value);
  j["argmin"] = to_json(m.argmin);
  j["method"] = m.method == MinMethod::ExactPareto ? "ExactPareto" : "GeodesicDescent";
  j["iterations"] = m.iterations;
  j["boundary"] = m.boundary;
  return j;
}

std::string digest_hex(std::uint64_t digest) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(digest));
  return buf;
}

json make_report(const std::string &command, std::uint64_t digest, json payload,
                 const ConfigEcho &config) {
  json j;
  j["version"] = kVersion;
  j["command"] = command;
  j["input_digest"] = digest_hex(digest);
  j["config"] = {{"tol_margin", config.tol_margin},
                 {"tol_sign", config.tol_sign},
                 {"max_exact_dim", config.max_exact_dim},
                 {"samples", config.samples},
                 {"seed", config.seed}};
  j["payload"] = std::move(payload);
  return j;
}

std::string render_structured(const json &report) { return report.dump(2) + "\n"; }

std::string render_text(const json &report) {
  std::ostringstream os;
  flatten(report, "", os);
  return os.str();
}

} // namespace sqc::report
