#include "sqc/errors.hpp"
#include "sqc/matrix_io.hpp"
#include "sqc/report.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace sqc;

TEST(MatrixDocument, ParseAndSymmetrize) {
  const auto doc = parse_matrix_document(R"({"n": 2, "rows": [[1, -1], [-1, 2e0]], "name": "t"})");
  EXPECT_EQ(doc.n, 2);
  EXPECT_EQ(doc.name, "t");
  EXPECT_EQ(to_symmatrix(doc)(1, 1), 2.0);
}

TEST(MatrixDocument, Malformed) {
  for (const char *bad : {"", "[1]", R"({"rows": [[1]]})", R"({"n": 2, "rows": [[1, 2]]})",
                          R"({"n": 2, "rows": [[1, 2], [3]]})",
                          R"({"n": 1, "rows": [["x"]]})", R"({"n": 1.5, "rows": [[1]]})",
                          "{not json"})
    EXPECT_THROW(parse_matrix_document(bad), InputError) << bad;
  const auto asym = parse_matrix_document(R"({"n": 2, "rows": [[1, 2], [3, 1]]})");
  EXPECT_THROW(to_symmatrix(asym), InputError);
  EXPECT_THROW(read_matrix_document("/nonexistent/file.json"), InputError);
}

TEST(MatrixDocument, BitExactRoundTrip) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const SymMatrix a(oracle::random_sym(6, seed, -1e3, 1e3) * 1e-7);
    const auto doc = to_document(a, "r");
    const std::string text = format_matrix_document(doc);
    const auto back = parse_matrix_document(text);
    EXPECT_EQ(back.rows, a.matrix());
    EXPECT_EQ(document_digest(back), document_digest(doc));
    EXPECT_EQ(format_matrix_document(back), text);
  }
}

TEST(MatrixDocument, DigestSensitivity) {
  auto doc = to_document(SymMatrix::identity(3));
  const auto d0 = document_digest(doc);
  doc.rows(0, 0) = std::nextafter(1.0, 2.0);
  EXPECT_NE(document_digest(doc), d0);
}

TEST(Report, Shape) {
  const double d[] = {1.0, 2.0, 3.0};
  const auto v = certify(SymMatrix::diagonal(d));
  const auto rep = report::make_report("analyze", 42, report::to_json(v), {});
  EXPECT_EQ(rep["version"], report::kVersion);
  EXPECT_EQ(rep["input_digest"], "000000000000002a");
  EXPECT_EQ(rep["payload"]["status"], "CertifiedNotQuasiconvex");
  EXPECT_EQ(rep["payload"]["witness"]["kind"], "ConeNonconvexity");
  EXPECT_EQ(rep["config"]["max_exact_dim"], 16);
  const auto reparsed = report::json::parse(report::render_structured(rep));
  EXPECT_EQ(reparsed, rep);
  const std::string text = report::render_text(rep);
  EXPECT_NE(text.find("payload.status: CertifiedNotQuasiconvex"), std::string::npos);
  EXPECT_NE(text.find("payload.witness.shift: 2.5"), std::string::npos);
}

TEST(Report, ParetoAndMin) {
  const auto a = SymMatrix::from_rows({{0, -1}, {-1, 0}});
  const auto s = report::to_json(pareto_spectrum(a));
  EXPECT_EQ(s["pairs"].size(), 1u);
  const auto m = report::to_json(minimize_orthant(a));
  EXPECT_EQ(m["method"], "ExactPareto");
}
