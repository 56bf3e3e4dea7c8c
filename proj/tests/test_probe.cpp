#include "sqc/errors.hpp"
#include "sqc/genex.hpp"
#include "sqc/probe.hpp"
#include "sqc/sphere.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace sqc;

TEST(Falsify, RejectsZeroSamples) {
  EXPECT_THROW(falsify(SymMatrix::identity(2), 0, 1), InputError);
}

TEST(Falsify, CertifiedFamilyHasNoWitness) {
  const double d[] = {-1.0, 1.0, 1.0};
  const auto r = falsify(SymMatrix::diagonal(d), 100000, 7);
  EXPECT_FALSE(r.witness);
  EXPECT_LE(r.best_margin, 1e-8);
  EXPECT_EQ(r.samples_used, 100000);
  EXPECT_EQ(r.seed, 7u);
}

TEST(Falsify, FindsPositiveOffDiagonal) {
  const auto a = SymMatrix::from_rows({{0, 1}, {1, 0}});
  const auto r = falsify(a, 1000, 3);
  ASSERT_TRUE(r.witness);
  EXPECT_TRUE(verify_witness(a, *r.witness));
  EXPECT_GT(r.best_margin, 1e-8);
}

TEST(Falsify, FindsDiag123) {
  const double d[] = {1.0, 2.0, 3.0};
  const auto a = SymMatrix::diagonal(d);
  const auto r = falsify(a, 20000, 11);
  ASSERT_TRUE(r.witness);
  EXPECT_TRUE(verify_witness(a, *r.witness));
}

TEST(Falsify, DeterministicAcrossExec) {
  const SymMatrix a(oracle::random_sym(4, 21));
  ProbeOptions s, p;
  s.exec = Exec::Serial;
  const auto rs = falsify(a, 5000, 9, s);
  const auto rp = falsify(a, 5000, 9, p);
  EXPECT_EQ(rs.best_margin, rp.best_margin);
  EXPECT_EQ(rs.witness.has_value(), rp.witness.has_value());
}

TEST(Falsify, WitnessesAgreeWithDenseGeodesicOracle) {
  // Whenever no witness is found for a random Z-matrix, a dense geodesic scan
  // over a few random pairs should not expose a clear violation either.
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Matrix m = -oracle::random_sym(3, 400 + seed, 0.0, 1.0);
    const SymMatrix a(m);
    const auto r = falsify(a, 20000, seed);
    if (r.witness) {
      EXPECT_TRUE(verify_witness(a, *r.witness));
      continue;
    }
    const auto pts = sample_orthant_sphere(3, 40, seed);
    for (std::size_t k = 0; k + 1 < pts.size(); k += 2)
      EXPECT_LE(oracle::geodesic_excess(m, pts[k].coords(), pts[k + 1].coords()), 1e-3);
  }
}

TEST(Falsify, HouseholderFamily) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto spec = genex::draw_family(genex::Family::Householder, seed);
    const auto r = falsify(genex::build(spec), 10000, seed);
    EXPECT_FALSE(r.witness);
  }
}

TEST(Falsify, FindsBoundaryViolationUnderPermutation) {
  // Z-matrix whose violations pair points on the faces {x2, x4} and {x0, x2};
  // interior samples alone tend to miss them.
  const auto a = SymMatrix::from_rows({{-0.301732, -1.83729, -1.01192, -0.973246, -1.12028},
                                       {-1.83729, -0.0284771, -1.42179, -0.470675, -1.73894},
                                       {-1.01192, -1.42179, 1.88569, -1.8255, -0.279785},
                                       {-0.973246, -0.470675, -1.8255, 0.756261, -1.97867},
                                       {-1.12028, -1.73894, -0.279785, -1.97867, 0.612224}});
  std::vector<int> perm = {0, 1, 2, 3, 4};
  for (int k = 0; k < 4; ++k) {
    const auto b = permute_similarity(a, perm);
    const auto r = falsify(b, 20000, k);
    ASSERT_TRUE(r.witness) << k;
    EXPECT_TRUE(verify_witness(b, *r.witness));
    std::rotate(perm.begin(), perm.begin() + 2, perm.end());
  }
}
