// Serial reference loops vs OpenMP kernels: results must match bit for bit.

#include "sqc/cones.hpp"
#include "sqc/probe.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <omp.h>

using namespace sqc;

namespace {

void expect_same(const std::vector<ParetoEigenpair> &a,
                 const std::vector<ParetoEigenpair> &b) {
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    EXPECT_EQ(a[k].value, b[k].value);
    EXPECT_EQ(a[k].vector, b[k].vector);
    EXPECT_EQ(a[k].support, b[k].support);
  }
}

} // namespace

TEST(ParetoKernel, SerialEqualsParallel) {
  for (int threads : {1, 2, 4}) {
    omp_set_num_threads(threads);
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
      const SymMatrix a(oracle::random_sym(3 + static_cast<int>(seed), seed));
      const ParetoOptions po;
      expect_same(kernels::enumerate_supports_serial(a, po),
                  kernels::enumerate_supports_parallel(a, po));
    }
  }
}

TEST(ParetoKernel, SpectrumEqualAcrossExec) {
  const SymMatrix a(oracle::random_sym(9, 77));
  ParetoOptions s, p;
  s.exec = Exec::Serial;
  p.exec = Exec::Parallel;
  const auto rs = pareto_spectrum(a, s);
  const auto rp = pareto_spectrum(a, p);
  EXPECT_EQ(rs.min_value, rp.min_value);
  expect_same(rs.pairs, rp.pairs);
}

TEST(ParetoKernel, MaskOrder) {
  const SymMatrix a(oracle::random_sym(4, 5));
  const ParetoOptions po;
  std::vector<ParetoEigenpair> concat;
  for (std::uint32_t mask = 1; mask < 16; ++mask)
    for (auto &p : kernels::support_candidates(a, mask, po))
      concat.push_back(std::move(p));
  expect_same(concat, kernels::enumerate_supports_serial(a, po));
}

TEST(ScanKernel, SerialEqualsParallel) {
  for (int threads : {1, 3}) {
    omp_set_num_threads(threads);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const SymMatrix a(oracle::random_sym(4, 50 + seed));
      for (int chunks : {1, 7, 64}) {
        const auto s = kernels::scan_serial(a, 3001, seed, chunks);
        const auto p = kernels::scan_parallel(a, 3001, seed, chunks);
        EXPECT_EQ(s.margin, p.margin);
        EXPECT_EQ(s.test, p.test);
        EXPECT_EQ(s.x, p.x);
        EXPECT_EQ(s.y, p.y);
      }
    }
  }
}

TEST(ScanKernel, FewerSamplesThanChunks) {
  const SymMatrix a(oracle::random_sym(3, 1));
  const auto s = kernels::scan_serial(a, 3, 0, 64);
  EXPECT_EQ(s.x.size(), 3);
  EXPECT_TRUE(std::isfinite(s.margin));
}

TEST(ScanKernel, ChunksSerialEqualsParallel) {
  omp_set_num_threads(3);
  const SymMatrix a(oracle::random_sym(5, 8));
  const auto s = kernels::scan_chunks_serial(a, 2000, 4, 16);
  const auto p = kernels::scan_chunks_parallel(a, 2000, 4, 16);
  ASSERT_EQ(s.size(), 16u);
  ASSERT_EQ(s.size(), p.size());
  for (std::size_t c = 0; c < s.size(); ++c) {
    EXPECT_EQ(s[c].margin, p[c].margin);
    EXPECT_EQ(s[c].x, p[c].x);
    EXPECT_EQ(s[c].y, p[c].y);
  }
}

TEST(ScanKernel, ScoreMatchesDirectPairMargin) {
  const SymMatrix a(oracle::random_sym(4, 2));
  const Vector x = Vector::Ones(4).normalized();
  const Vector y = Vector::Unit(4, 1);
  const auto c = kernels::score(a, x, y);
  const double pair = a.matrix().row(1).dot(x) -
                      x.dot(y) * std::max(a.quadratic_form(x), a.quadratic_form(y));
  EXPECT_GE(c.margin, pair - 1e-15);
}

TEST(BestPairs, OrderedAndBounded) {
  const SymMatrix a(oracle::random_sym(3, 6));
  std::vector<Vector> pts;
  for (int i = 0; i < 3; ++i)
    pts.push_back(Vector::Unit(3, i));
  pts.push_back(Vector::Ones(3).normalized());
  const auto top = kernels::best_pairs(a, pts, 4);
  ASSERT_EQ(top.size(), 4u);
  auto rank = [](const kernels::ProbeCandidate &c) {
    return c.margin / std::max((c.x - c.y).squaredNorm(), 1e-6);
  };
  for (std::size_t k = 1; k < top.size(); ++k)
    EXPECT_GE(rank(top[k - 1]), rank(top[k]));
  EXPECT_EQ(kernels::best_pairs(a, pts, 100).size(), 6u);
  EXPECT_TRUE(kernels::best_pairs(a, {pts[0]}, 3).empty());
}
