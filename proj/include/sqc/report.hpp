#pragma once

#include "sqc/certify.hpp"
#include "sqc/cones.hpp"
#include "sqc/probe.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>

namespace sqc::report {

using nlohmann::json;

inline constexpr const char *kVersion = "sqc-report/1";

struct ConfigEcho {
  double tol_margin = 1e-8;
  double tol_sign = 1e-10;
  int max_exact_dim = 16;
  std::int64_t samples = 100000;
  std::uint64_t seed = 0;
};

json to_json(const Vector &v);
json to_json(const Witness &w);
json to_json(const Certificate &c);
json to_json(const ProbeReport &p);
json to_json(const Verdict &v);
json to_json(const ParetoSpectrum &s);
json to_json(const MinResult &m);

std::string digest_hex(std::uint64_t digest);

/// {"version", "command", "input_digest", "config", "payload"}.
json make_report(const std::string &command, std::uint64_t digest,
                 json payload, const ConfigEcho &config);

/// Indented JSON, keys in a fixed order, trailing newline.
std::string render_structured(const json &report);

/// Human-readable rendering of the same report: one "path: value" line per
/// scalar, vectors printed inline.
std::string render_text(const json &report);

} // namespace sqc::report
