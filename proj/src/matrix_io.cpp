#include "sqc/matrix_io.hpp"

#include "sqc/errors.hpp"

#include <nlohmann/json.hpp>

#include <bit>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace sqc {

using nlohmann::json;

MatrixDocument parse_matrix_document(const std::string &text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error &e) {
    throw InputError(std::string("matrix document is not valid JSON: ") + e.what());
  }
  if (!j.is_object())
    throw InputError("matrix document must be an object");
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw InputError("matrix document needs an integer field \"n\"");
  if (!j.contains("rows") || !j["rows"].is_array())
    throw InputError("matrix document needs an array field \"rows\"");

  MatrixDocument doc;
  const auto n = j["n"].get<long long>();
  if (n < 1 || n > 100000)
    throw InputError("matrix document: n out of range");
  doc.n = static_cast<int>(n);
  const json &rows = j["rows"];
  if (static_cast<long long>(rows.size()) != n)
    throw InputError("matrix document: n = " + std::to_string(n) + " but " +
                     std::to_string(rows.size()) + " rows");
  doc.rows.resize(doc.n, doc.n);
  for (int i = 0; i < doc.n; ++i) {
    const json &row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<long long>(row.size()) != n)
      throw InputError("matrix document: row " + std::to_string(i) +
                       " must be an array of " + std::to_string(n) + " numbers");
    for (int k = 0; k < doc.n; ++k) {
      const json &x = row[static_cast<std::size_t>(k)];
      if (!x.is_number())
        throw InputError("matrix document: non-numeric entry in row " +
                         std::to_string(i));
      doc.rows(i, k) = x.get<double>();
    }
  }
  if (j.contains("name")) {
    if (!j["name"].is_string())
      throw InputError("matrix document: \"name\" must be a string");
    doc.name = j["name"].get<std::string>();
  }
  return doc;
}

MatrixDocument read_matrix_document(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw InputError("cannot read matrix document '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_matrix_document(ss.str());
}

std::string format_matrix_document(const MatrixDocument &doc) {
  std::ostringstream os;
  os << "{\n";
  if (doc.name)
    os << "  \"name\": " << json(*doc.name).dump() << ",\n";
  os << "  \"n\": " << doc.n << ",\n  \"rows\": [\n";
  char buf[40];
  for (int i = 0; i < doc.n; ++i) {
    os << "    [";
    for (int k = 0; k < doc.n; ++k) {
      double x = doc.rows(i, k);
      if (x == 0.0)
        x = 0.0; // drop negative zero
      std::snprintf(buf, sizeof buf, "%.16e", x);
      os << (k ? ", " : "") << buf;
    }
    os << "]" << (i + 1 < doc.n ? "," : "") << "\n";
  }
  os << "  ]\n}\n";
  return os.str();
}

MatrixDocument to_document(const SymMatrix &a, std::optional<std::string> name) {
  MatrixDocument doc;
  doc.n = a.dim();
  doc.rows = a.matrix();
  doc.name = std::move(name);
  return doc;
}

SymMatrix to_symmatrix(const MatrixDocument &doc) { return SymMatrix(doc.rows); }

std::uint64_t document_digest(const MatrixDocument &doc) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  auto mix = [&](std::uint64_t w) {
    for (int b = 0; b < 8; ++b) {
      h ^= (w >> (8 * b)) & 0xffu;
      h *= 0x100000001b3ull;
    }
  };
  mix(static_cast<std::uint64_t>(doc.n));
  for (int i = 0; i < doc.rows.rows(); ++i)
    for (int k = 0; k < doc.rows.cols(); ++k)
      mix(std::bit_cast<std::uint64_t>(doc.rows(i, k)));
  return h;
}

} // namespace sqc
