#include <gtest/gtest.h>

#include <array>

#include "support.hpp"

using namespace nilcontact;
using testing_support::leibniz_det;

namespace {

using Octonion = std::array<Scalar, 8>;

Octonion omul(const Octonion& a, const Octonion& b) {
  Octonion out{};
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      if (a[i] == 0 || b[j] == 0) continue;
      const OctonionProduct pr = octonion_mul(i, j);
      out[pr.index] += Scalar(pr.sign) * a[i] * b[j];
    }
  return out;
}

Scalar onorm(const Octonion& a) {
  Scalar s = 0;
  for (const auto& x : a) s += x * x;
  return s;
}

Octonion random_octonion(Rng& rng) {
  Octonion o;
  for (auto& x : o) x = rng.rational();
  return o;
}

ProbeConfig quick_probe() {
  ProbeConfig c;
  c.primes = {5, 7};
  c.budget = 20'000;
  return c;
}

}  // namespace

TEST(Catalog, EntriesAndDimensions) {
  const auto& list = catalog_list();
  EXPECT_GE(list.size(), 7u);
  for (const auto& e : list) {
    const SymCubic t = e.build();
    EXPECT_EQ(t.dim(), e.p) << e.name;
    EXPECT_EQ(b_rank(t), e.p) << e.name;
    EXPECT_EQ(t, e.build()) << e.name;
    EXPECT_EQ(t, t.normalized()) << e.name;
  }
  const SymCubic x3 = find_catalog_entry("x3").build();
  ASSERT_EQ(x3.entries().size(), 1u);
  EXPECT_EQ(x3.at(0, 0, 0), 1);
  for (std::size_t p : {2u, 5u, 27u}) {
    const CatalogEntry e = find_catalog_entry("xq" + std::to_string(p));
    EXPECT_EQ(e.p, p);
    EXPECT_EQ(b_rank(e.build()), p);
  }
  EXPECT_THROW(find_catalog_entry("xq1"), InputError);
  EXPECT_THROW(find_catalog_entry("nope"), InputError);
}

TEST(Catalog, Det3IsSixTimesDeterminant) {
  const SymCubic t = cubic_det3();
  EXPECT_EQ(cubic_eval(t, det3_identity()), 6);
  Rng rng(1);
  for (int s = 0; s < 20; ++s) {
    const Vec v = rng.vec(9);
    Matrix m(3, 3);
    for (std::size_t k = 0; k < 9; ++k) m(k / 3, k % 3) = v[k];
    EXPECT_EQ(cubic_eval(t, v), 6 * leibniz_det(m));
  }
}

TEST(Catalog, DetSym3IsSixTimesDeterminant) {
  const SymCubic t = cubic_det_sym3();
  Rng rng(2);
  for (int s = 0; s < 20; ++s) {
    const Vec v = rng.vec(6);  // a, b, c, d = (12), e = (13), f = (23)
    const Matrix m = Matrix::from_rows({{v[0], v[3], v[4]}, {v[3], v[1], v[5]}, {v[4], v[5], v[2]}});
    EXPECT_EQ(cubic_eval(t, v), 6 * leibniz_det(m));
  }
}

// Pf(S)^2 = det(S).
TEST(Catalog, PfaffianSquaresToDeterminant) {
  const SymCubic t = cubic_pfaff6();
  EXPECT_NE(cubic_eval(t, pfaff6_standard()), 0);
  EXPECT_EQ(abs(cubic_eval(t, pfaff6_standard())), 6);
  Rng rng(3);
  for (int s = 0; s < 10; ++s) {
    const Vec v = rng.vec(15);
    Matrix m(6, 6);
    std::size_t k = 0;
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = i + 1; j < 6; ++j) {
        m(i, j) = v[k];
        m(j, i) = -v[k];
        ++k;
      }
    const Scalar c = cubic_eval(t, v);
    EXPECT_EQ(c * c, 36 * determinant(m));
  }
}

TEST(Octonions, CompositionAndAlternativity) {
  for (int i = 1; i < 8; ++i) {
    EXPECT_EQ(octonion_mul(i, i).sign, -1);
    EXPECT_EQ(octonion_mul(i, i).index, 0);
    for (int j = 1; j < 8; ++j) {
      if (i == j) continue;
      EXPECT_EQ(octonion_mul(i, j).index, octonion_mul(j, i).index);
      EXPECT_EQ(octonion_mul(i, j).sign, -octonion_mul(j, i).sign);
    }
  }
  Rng rng(4);
  for (int s = 0; s < 20; ++s) {
    const Octonion a = random_octonion(rng), b = random_octonion(rng);
    EXPECT_EQ(onorm(omul(a, b)), onorm(a) * onorm(b));
    EXPECT_EQ(omul(omul(a, a), b), omul(a, omul(a, b)));
    EXPECT_EQ(omul(omul(b, a), a), omul(b, omul(a, a)));
  }
  EXPECT_THROW(octonion_mul(8, 0), InputError);
}

// On real entries the octonion norm is the symmetric 3x3 determinant.
TEST(Catalog, J3oRestrictsToRealSymmetricDeterminant) {
  const SymCubic t = cubic_j3o();
  Rng rng(5);
  for (int s = 0; s < 10; ++s) {
    Vec v = zero_vec(27);
    const Scalar l1 = rng.rational(), l2 = rng.rational(), l3 = rng.rational();
    const Scalar a1 = rng.rational(), a2 = rng.rational(), a3 = rng.rational();
    v[0] = l1, v[1] = l2, v[2] = l3;
    v[3] = a1, v[11] = a2, v[19] = a3;
    const Matrix m = Matrix::from_rows({{l1, a3, a2}, {a3, l2, a1}, {a2, a1, l3}});
    EXPECT_EQ(cubic_eval(t, v), 6 * leibniz_det(m));
  }
}

// Full norm l1 l2 l3 - sum l_i n(a_i) + 2 Re(a1 (a2 a3)) through octonion arithmetic.
TEST(Catalog, J3oMatchesOctonionFormula) {
  const SymCubic t = cubic_j3o();
  Rng rng(6);
  for (int s = 0; s < 10; ++s) {
    const Vec v = rng.vec(27);
    std::array<Octonion, 3> a;
    for (int w = 0; w < 3; ++w)
      for (int k = 0; k < 8; ++k) a[w][k] = v[3 + 8 * w + k];
    const Scalar n = v[0] * v[1] * v[2] - v[0] * onorm(a[0]) - v[1] * onorm(a[1]) - v[2] * onorm(a[2]) +
                     2 * omul(a[0], omul(a[1], a[2]))[0];
    EXPECT_EQ(cubic_eval(t, v), 6 * n);
  }
}

TEST(Signature, Examples) {
  const Signature x3 = signature(cubic_x3(), quick_probe());
  EXPECT_EQ(x3.p, 1u);
  EXPECT_EQ(x3.b_rank, 1u);
  EXPECT_EQ(x3.probe, "none-found");
  const Signature ds = signature(cubic_det_sym3(), quick_probe());
  EXPECT_EQ(ds.p, 6u);
  EXPECT_EQ(ds.b_rank, 6u);
  EXPECT_EQ(ds.probe, "witness-found");
  EXPECT_EQ(signature(SymCubic(2), quick_probe()).b_rank, 0u);
  EXPECT_EQ(to_json(signature(cubic_det3(), quick_probe())), to_json(signature(cubic_det3(), quick_probe())));
  // the evaluation hash does not see the scale
  EXPECT_EQ(signature(cubic_det3().scaled(Scalar(-5, 3)), quick_probe()).eval_hash,
            signature(cubic_det3(), quick_probe()).eval_hash);
}

TEST(Signature, ComparisonsWithExtractedCubics) {
  const ProbeConfig cfg = quick_probe();
  const ComparisonReport g2 = compare_to_extraction(find_catalog_entry("x3"), ChevalleyAlgebra(RootSystem::parse("G2")), cfg);
  EXPECT_TRUE(g2.consistent());
  EXPECT_EQ(g2.extracted.p, 1u);
  const ComparisonReport f4 =
      compare_to_extraction(find_catalog_entry("det-sym-3"), ChevalleyAlgebra(RootSystem::parse("F4")), cfg);
  EXPECT_TRUE(f4.consistent());
  EXPECT_EQ(f4.extracted.p, 6u);
  const ComparisonReport bad = compare_to_extraction(find_catalog_entry("x3"), ChevalleyAlgebra(RootSystem::parse("F4")), cfg);
  EXPECT_FALSE(bad.consistent());
  EXPECT_EQ(to_json(bad)["verdict"], "mismatch");
  // same p, different probe class
  const ComparisonReport probe_only =
      compare_signatures("fermat3", signature(cubic_fermat(3), cfg), "xyz", signature(cubic_xyz(), cfg));
  EXPECT_EQ(probe_only.mismatches.size(), 1u);
}
