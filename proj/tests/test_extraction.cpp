#include <gtest/gtest.h>

#include "support.hpp"

using namespace nilcontact;

namespace {

const std::vector<std::pair<std::string, std::size_t>> kExceptional{
    {"G2", 1}, {"F4", 6}, {"E6", 9}, {"E7", 15}, {"E8", 27}};

SparseVec<Scalar> combination(const std::vector<std::size_t>& basis, const Vec& coeffs) {
  SparseVec<Scalar> out;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (coeffs[i] != 0) sparse_axpy(out, coeffs[i], SparseVec<Scalar>{{basis[i], Scalar(1)}});
  }
  return out;
}

}  // namespace

TEST(FindAlpha, UniqueForNonATypes) {
  for (const char* name : {"G2", "F4", "E6", "E7", "E8", "B4", "C3", "D5"}) {
    const RootSystem rs = RootSystem::parse(name);
    const int a = find_alpha(rs);
    EXPECT_TRUE(rs.is_root(rs.highest_root() - rs.simple_root(a))) << name;
    int count = 0;
    for (int i = 0; i < rs.rank(); ++i) count += rs.is_root(rs.highest_root() - rs.simple_root(i));
    EXPECT_EQ(count, 1) << name;
  }
  // G2: the long simple root
  const RootSystem g2 = RootSystem::parse("G2");
  const Root a = g2.simple_root(find_alpha(g2));
  EXPECT_EQ(g2.inner(a, a), 6);
}

TEST(FindAlpha, TypeARejectedWithBothCandidates) {
  try {
    find_alpha(RootSystem::parse("A3"));
    FAIL() << "A3 accepted";
  } catch (const TypeRejected& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("2 simple roots"), std::string::npos) << msg;
    EXPECT_NE(msg.find("alpha_1"), std::string::npos) << msg;
    EXPECT_NE(msg.find("alpha_3"), std::string::npos) << msg;
  }
  EXPECT_THROW(find_alpha(RootSystem::parse("A1")), TypeRejected);
}

TEST(DoubleGrading, PieceDimensions) {
  for (const auto& [name, p] : kExceptional) {
    const ChevalleyAlgebra alg(RootSystem::parse(name));
    const DoubleGrading dg = double_grading(alg);
    EXPECT_EQ(dg.piece(1, 1).size(), p) << name;
    EXPECT_EQ(dg.piece(1, 0).size(), p) << name;
    EXPECT_EQ(dg.piece(0, 1).size(), p) << name;
    EXPECT_EQ(dg.piece(2, 1).size(), 1u);
    EXPECT_EQ(dg.piece(1, 2).size(), 1u);
    const RootSystem& rs = alg.roots();
    EXPECT_EQ(dg.degree[alg.root_basis_index(rs.simple_root(dg.alpha))], Bidegree(1, -1));
    for (const auto& [a, b] : dg.degree) {
      EXPECT_LE(std::abs(a), 2);
      EXPECT_LE(std::abs(b), 2);
    }
  }
}

TEST(DoubleGrading, BracketsAddDegrees) {
  for (const char* name : {"G2", "F4", "E6"}) {
    const ChevalleyAlgebra alg(RootSystem::parse(name));
    const DoubleGrading dg = double_grading(alg);
    for (std::size_t i = 0; i < alg.dim(); ++i) {
      for (std::size_t j = 0; j < alg.dim(); ++j) {
        const Bidegree want{dg.degree[i].first + dg.degree[j].first, dg.degree[i].second + dg.degree[j].second};
        for (const auto& [k, c] : alg.structure()(i, j)) EXPECT_EQ(dg.degree[k], want) << name;
      }
    }
  }
}

TEST(DoubleGrading, TypeCRejected) {
  for (const char* name : {"C3", "C4", "B2"}) {
    EXPECT_THROW(double_grading(ChevalleyAlgebra(RootSystem::parse(name))), TypeRejected) << name;
  }
}

TEST(Extraction, PairingsAndAssumption) {
  for (const auto& [name, p] : kExceptional) {
    const ChevalleyAlgebra alg(RootSystem::parse(name));
    const Extraction ex = extract_cubic(alg);
    EXPECT_TRUE(ex.pairings.pass()) << name;
    EXPECT_EQ(ex.pairings.rank1, p);
    EXPECT_EQ(ex.pairings.rank2, p);
    EXPECT_EQ(ex.cubic.dim(), p);
    EXPECT_EQ(b_rank(ex.cubic), p) << name;
    EXPECT_EQ(ex.cubic, ex.cubic.normalized());
    EXPECT_EQ(ex.raw.normalized(), ex.cubic);
  }
}

TEST(Extraction, G2GivesTheCube) {
  const Extraction ex = extract_cubic(ChevalleyAlgebra(RootSystem::parse("G2")));
  EXPECT_EQ(ex.cubic, cubic_x3());
  EXPECT_EQ(dump_cubic(ex.cubic), dump_cubic(cubic_x3()));
}

// [phi X, [phi X, X]] = c(X) e_psi, recomputed from the Chevalley table.
TEST(Extraction, DoubleBracketIdentity) {
  for (const char* name : {"G2", "F4", "E6"}) {
    const ChevalleyAlgebra alg(RootSystem::parse(name));
    const Extraction ex = extract_cubic(alg);
    const auto& s = alg.rational_structure();
    const auto& v_basis = ex.grading.piece(0, 1);
    const auto& u_basis = ex.grading.piece(1, 0);
    const std::size_t p = v_basis.size();
    Rng rng(3);
    for (int k = 0; k < 10; ++k) {
      const Vec t = rng.vec(p);
      Vec phi_t = zero_vec(p);
      for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j) phi_t[j] += t[i] * ex.phi(i, j);
      const auto x = combination(v_basis, t);
      const auto px = combination(u_basis, phi_t);
      const auto db = s.bracket(px, s.bracket(px, x));
      const Scalar c = cubic_eval(ex.raw, t);
      if (c == 0) {
        EXPECT_TRUE(db.empty());
      } else {
        ASSERT_EQ(db.size(), 1u) << name;
        EXPECT_EQ(db[0].first, ex.grading.e_psi);
        EXPECT_EQ(db[0].second, c) << name;
      }
    }
  }
}

TEST(Embedding, PassesForExceptionalTypes) {
  for (const auto& [name, p] : kExceptional) {
    const ChevalleyAlgebra alg(RootSystem::parse(name));
    const EmbeddingReport r = verify_embedding(alg, extract_cubic(alg));
    EXPECT_TRUE(r.pass) << name << ": " << r.first_mismatch;
    EXPECT_EQ(r.dim_n, 3 * p + 2);
    EXPECT_NE(r.lambda, 0);
    EXPECT_EQ(r.pairs_checked, static_cast<std::uint64_t>(r.dim_n * r.dim_n));
  }
}

TEST(Embedding, BAndDSeries) {
  for (const char* name : {"B3", "B4", "B6", "D4", "D5", "D8"}) {
    const ChevalleyAlgebra alg(RootSystem::parse(name));
    const Extraction ex = extract_cubic(alg);
    EXPECT_EQ(b_rank(ex.cubic), ex.pairings.p) << name;
    EXPECT_TRUE(verify_embedding(alg, ex).pass) << name;
    EXPECT_TRUE(ternary_dimension_check(alg, ex).consistent) << name;
  }
}

// A cubic that is off by a non-scalar change must not pass.
TEST(Embedding, DetectsWrongCubic) {
  const ChevalleyAlgebra alg(RootSystem::parse("F4"));
  Extraction ex = extract_cubic(alg);
  ex.cubic = cubic_fermat(6);
  EXPECT_FALSE(verify_embedding(alg, ex).pass);
}

TEST(Ternary, Dimensions) {
  const std::map<std::string, long> want{{"G2", 0}, {"F4", 8}, {"E6", 16}, {"E7", 35}, {"E8", 78}};
  for (const auto& [name, h] : want) {
    const ChevalleyAlgebra alg(RootSystem::parse(name));
    const TernaryReport r = ternary_dimension_check(alg, extract_cubic(alg));
    EXPECT_EQ(r.dim_h, h) << name;
    EXPECT_EQ(r.dim_h_from_grading, h) << name;
    EXPECT_TRUE(r.consistent);
    EXPECT_EQ(r.piece_dims.size(), 13u);
  }
}

TEST(Extraction, GradingReportIsStable) {
  const ChevalleyAlgebra alg(RootSystem::parse("E7"));
  const Extraction ex = extract_cubic(alg);
  EXPECT_EQ(grading_json(alg, ex).dump(), grading_json(alg, extract_cubic(alg)).dump());
  EXPECT_EQ(grading_json(alg, ex)["p"], 15);
}
