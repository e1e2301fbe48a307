#include <gtest/gtest.h>

#include "support.hpp"

using namespace nilcontact;
using testing_support::ints;
using testing_support::random_nelem;

namespace {

NElem v_tensor(const Vec& v, std::size_t a) {
  NElem x = NElem::zero(v.size());
  x.n1[a] = v;
  return x;
}

// ad x on n + Q D, where D is the grading derivation. This representation is
// faithful on the group, so Ad(exp X) Ad(exp Y) = Ad(exp H(X, Y)) pins H down.
Matrix ad_extended(const NElem& x, const SymCubic& t) {
  const std::size_t p = t.dim(), n = n_dim(p);
  Matrix m(n + 1, n + 1);
  for (std::size_t j = 0; j < n; ++j) {
    const Vec col = n_coordinates(bracket(x, n_basis(p, j), t));
    for (std::size_t i = 0; i < n; ++i) m(i, j) = col[i];
  }
  // [x, D] = -[D, x] = -(deg-weighted x)
  const Vec xc = n_coordinates(x);
  for (std::size_t i = 0; i < n; ++i) m(i, n) = -Scalar(n_basis_degree(p, i)) * xc[i];
  return m;
}

Matrix exp_nilpotent(const Matrix& a) {
  Matrix out = Matrix::identity(a.rows());
  Matrix power = Matrix::identity(a.rows());
  Scalar fact = 1;
  for (int k = 1; k <= 5; ++k) {
    power = power * a;
    fact *= k;
    Matrix term = power;
    for (std::size_t r = 0; r < term.rows(); ++r)
      for (std::size_t c = 0; c < term.cols(); ++c) term(r, c) /= fact;
    out = out + term;
  }
  return out;
}

// Inversion of e_X written as the chart formula with a free coefficient on [X1, [X1, Z1]].
NElem displayed_inverse(const NElem& x, const NElem& z, const SymCubic& t, const Scalar& coef) {
  const NElem x1 = x.grade(1), x2 = x.grade(2);
  const NElem z1 = z.grade(1), z2 = z.grade(2), z3 = z.grade(3);
  NElem y = z1;
  y += z2 - Scalar(1, 2) * bracket(x1, z1, t);
  y += z3 - Scalar(1, 2) * bracket(x1, z2, t) - Scalar(1, 2) * bracket(x2, z1, t) +
       coef * bracket(x1, bracket(x1, z1, t), t);
  return y;
}

NElem chart_random(std::size_t p, Rng& rng) {
  NElem x = random_nelem(p, rng);
  x.n1[kEll] = zero_vec(p);
  return x;
}

}  // namespace

TEST(Bch, Examples) {
  const SymCubic t = cubic_x3();
  const NElem x = v_tensor(ints({1}), kEll), y = v_tensor(ints({1}), kEm);
  const NElem h = bch(x, y, t);
  EXPECT_EQ(h.n1[kEll], ints({1}));
  EXPECT_EQ(h.n1[kEm], ints({1}));
  EXPECT_EQ(h.n2, Covec(Vec{Scalar(1, 2)}));
  EXPECT_EQ(h.n3[kEll], Scalar(-1, 12));
  EXPECT_EQ(h.n3[kEm], Scalar(1, 12));

  Rng rng(1);
  for (int s = 0; s < 100; ++s) {
    const NElem a = random_nelem(1, rng);
    EXPECT_EQ(bch(a, NElem::zero(1), t), a);
    EXPECT_TRUE(bch(a, -a, t).is_zero());
  }
}

TEST(Bch, AgreesWithAdjointRepresentation) {
  Rng rng(2);
  for (const char* name : {"x3", "xq3", "det-sym-3"}) {
    const SymCubic t = find_catalog_entry(name).build();
    for (int s = 0; s < 10; ++s) {
      const NElem x = random_nelem(t.dim(), rng), y = random_nelem(t.dim(), rng);
      const Matrix lhs = exp_nilpotent(ad_extended(x, t)) * exp_nilpotent(ad_extended(y, t));
      EXPECT_EQ(lhs, exp_nilpotent(ad_extended(bch(x, y, t), t))) << name;
    }
  }
}

TEST(Bch, DegreeOneIsAdditive) {
  Rng rng(3);
  const SymCubic t = cubic_det3();
  for (int s = 0; s < 50; ++s) {
    const NElem x = random_nelem(9, rng), y = random_nelem(9, rng);
    EXPECT_TRUE((bch(x, y, t) - x - y).grade(1).is_zero());
  }
}

TEST(Group, LawsOnCatalogCubics) {
  for (const auto& e : catalog_list()) {
    const SymCubic t = e.build();
    const std::size_t p = t.dim();
    Rng rng(4);
    const GroupElem id = GroupElem::identity(p);
    for (int s = 0; s < 100; ++s) {
      const GroupElem a{random_nelem(p, rng)}, b{random_nelem(p, rng)}, c{random_nelem(p, rng)};
      ASSERT_EQ(group_mul(group_mul(a, b, t), c, t), group_mul(a, group_mul(b, c, t), t)) << e.name;
      ASSERT_EQ(group_mul(a, id, t), a);
      ASSERT_EQ(group_mul(id, a, t), a);
      ASSERT_EQ(group_mul(a, group_inv(a), t), id);
      ASSERT_EQ(group_inv(a).log, -a.log);
    }
  }
}

TEST(ExpDiff, Examples) {
  const SymCubic t = cubic_x3();
  Rng rng(5);
  const NElem y0 = random_nelem(1, rng);
  EXPECT_EQ(exp_diff(NElem::zero(1), y0, t), y0);

  // X, Y in V (x) l commute
  const SymCubic d = cubic_det_sym3();
  const NElem a = v_tensor(rng.vec(6), kEll), b = v_tensor(rng.vec(6), kEll);
  EXPECT_EQ(exp_diff(a, b, d), b);

  const NElem x = v_tensor(ints({1}), kEll), y = v_tensor(ints({1}), kEm);
  NElem want = y;
  want.n2 = Covec(Vec{Scalar(1, 2)});
  want.n3[kEll] = Scalar(-1, 12);
  EXPECT_EQ(exp_diff(x, y, t), want);
}

TEST(ExpDiff, InverseOnBasisAndSamples) {
  for (const auto& e : catalog_list()) {
    const SymCubic t = e.build();
    const std::size_t p = t.dim();
    Rng rng(6);
    const NElem x = random_nelem(p, rng);
    for (std::size_t k = 0; k < n_dim(p); ++k) {
      const NElem z = n_basis(p, k);
      ASSERT_EQ(exp_diff(x, exp_diff_inv(x, z, t), t), z) << e.name;
      ASSERT_EQ(exp_diff_inv(x, exp_diff(x, z, t), t), z) << e.name;
    }
    for (int s = 0; s < 100; ++s) {
      const NElem xs = random_nelem(p, rng), z = random_nelem(p, rng);
      ASSERT_EQ(exp_diff(xs, exp_diff_inv(xs, z, t), t), z) << e.name;
    }
  }
  EXPECT_EQ(exp_diff_inv(NElem::zero(2), n_basis(2, 3), SymCubic(2)), n_basis(2, 3));
}

// On the chart, [X1, Z1] = 0 and the displayed 5/12 formula is exact. Off the chart
// the correct coefficient is 1/6 and 5/12 is wrong.
TEST(ExpDiff, DisplayedInversionOnChartSubspace) {
  const SymCubic t = cubic_det_sym3();
  Rng rng(7);
  for (int s = 0; s < 100; ++s) {
    const NElem x = chart_random(6, rng), z = chart_random(6, rng);
    EXPECT_TRUE(bracket(x.grade(1), z.grade(1), t).is_zero());
    EXPECT_EQ(exp_diff_inv(x, z, t), displayed_inverse(x, z, t, Scalar(5, 12)));
  }
  bool differs = false;
  for (int s = 0; s < 20; ++s) {
    const NElem x = random_nelem(6, rng), z = random_nelem(6, rng);
    EXPECT_EQ(exp_diff_inv(x, z, t), displayed_inverse(x, z, t, Scalar(1, 6)));
    differs = differs || !(exp_diff_inv(x, z, t) == displayed_inverse(x, z, t, Scalar(5, 12)));
  }
  EXPECT_TRUE(differs);
}

TEST(ChartElem, RoundTrip) {
  Rng rng(8);
  const NElem x = chart_random(3, rng);
  const ChartElem c = ChartElem::from_nelem(x);
  EXPECT_EQ(c.to_nelem(), x);
  EXPECT_EQ(c.x1, x.n1[kEm]);
  EXPECT_EQ(c.x2, -x.n2);
  EXPECT_EQ(c.x3[0], x.n3[kEm]);
  EXPECT_EQ(c.x3[1], x.n3[kEll]);
  EXPECT_EQ(ChartElem::from_coordinates(3, c.coordinates()), c);
  EXPECT_THROW(ChartElem::from_nelem(random_nelem(3, rng)), PreconditionError);
}

TEST(LineCoordinates, Examples) {
  const NilpotentAlgebra x3(cubic_x3());
  const LineSolution zero = solve_line_coordinates(ints({0}), x3);
  EXPECT_TRUE(is_zero(zero.w));
  for (const auto& c : zero.z) EXPECT_EQ(c, ChartElem::zero(1));

  const LineSolution one = solve_line_coordinates(ints({1}), x3);
  ASSERT_GE(one.z.size(), 2u);
  EXPECT_EQ(one.z[1].x1, ints({-1}));
  EXPECT_EQ(one.w, ints({1}));
  EXPECT_EQ(abs(one.z[1].x3[1]), Scalar(1, 6));
  EXPECT_THROW(solve_line_coordinates(ints({1, 1}), NilpotentAlgebra(SymCubic(2))), AssumptionViolated);
}

TEST(LineCoordinates, SubstitutionReproducesTheLine) {
  Rng rng(9);
  for (const char* name : {"x3", "xyz", "det-sym-3", "det3"}) {
    const NilpotentAlgebra alg(find_catalog_entry(name).build());
    for (int s = 0; s < 20; ++s) {
      const Vec v = rng.vec(alg.p());
      if (is_zero(v)) continue;
      const LineSolution sol = solve_line_coordinates(v, alg);
      ASSERT_GE(sol.z.size(), 2u);
      EXPECT_EQ(sol.z[1].x1, -v);
      EXPECT_EQ(sol.w, v);
      const NPoly back = bch(sol.z_log, sol.w_log, alg.cubic());
      EXPECT_EQ(back, NPoly::constant(v_tensor(v, kEll))) << name;
      // Z stays in the chart complement
      for (const NElem& c : sol.z_log.coeffs()) EXPECT_TRUE(is_zero(c.n1[kEll]));
      // evaluation at a rational z agrees with the group law
      const Scalar zz = rng.rational();
      EXPECT_EQ(bch(sol.z_log.evaluate(zz), sol.w_log.evaluate(zz), alg.cubic()), v_tensor(v, kEll));
    }
  }
}

TEST(LineCoordinates, ConstantsDoNotDependOnV) {
  const NilpotentAlgebra x3(cubic_x3());
  auto constants = [&](long v) {
    const LineSolution s = solve_line_coordinates(ints({v}), x3);
    const Vec vv = ints({v});
    return std::array<Scalar, 3>{s.z[1].x1[0] / v, s.z[1].x2[0] / polarize(x3.cubic(), vv, vv)[0],
                                 s.z[1].x3[1] / cubic_eval(x3.cubic(), vv)};
  };
  EXPECT_EQ(constants(1), constants(2));
  EXPECT_EQ(constants(1), constants(-3));
  const auto c = constants(1);
  EXPECT_EQ(abs(c[0]), 1);
  EXPECT_EQ(abs(c[1]), Scalar(1, 2));
  EXPECT_EQ(abs(c[2]), Scalar(1, 6));
}
