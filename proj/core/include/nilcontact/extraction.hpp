#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "nilcontact/chevalley.hpp"
#include "nilcontact/linalg.hpp"
#include "nilcontact/sym_cubic.hpp"

namespace nilcontact {

// The unique simple root alpha with psi - alpha a root. Throws TypeRejected naming
// every candidate when there is not exactly one.
int find_alpha(const RootSystem& rs);

using Bidegree = std::pair<int, int>;

// Eigenvalues (a, b) of ad(H_psi) and ad(H_{psi - alpha}) on every basis vector.
struct DoubleGrading {
  int alpha = -1;  // simple root index
  std::vector<Bidegree> degree;  // per basis index
  std::map<Bidegree, std::vector<std::size_t>> pieces;

  const std::vector<std::size_t>& piece(int a, int b) const;
  std::size_t e_psi = 0;        // basis index of e_psi, the (2, 1) piece
  std::size_t e_psi_alpha = 0;  // basis index of e_{psi - alpha}, the (1, 2) piece
};

// Throws TypeRejected unless psi and psi - alpha sit alone at (2, 1) and (1, 2).
DoubleGrading double_grading(const ChevalleyAlgebra& alg);

struct PairingReport {
  std::size_t p = 0;
  Matrix p1;  // (0,1) x (1,1) -> e_{psi - alpha}
  Matrix p2;  // (1,0) x (1,1) -> e_psi
  std::size_t rank1 = 0;
  std::size_t rank2 = 0;
  bool pass() const { return rank1 == p && rank2 == p; }
};

PairingReport verify_pairings(const ChevalleyAlgebra& alg, const DoubleGrading& dg);

struct Extraction {
  DoubleGrading grading;
  PairingReport pairings;
  Matrix phi;       // row i: phi(X_i) on the (1,0) basis
  SymCubic raw;     // [phi X, [phi X, X]] on e_psi, symmetrised
  SymCubic cubic;   // raw, normalised
};

// Throws TypeRejected when the grading or the pairings fail.
Extraction extract_cubic(const ChevalleyAlgebra& alg);

struct EmbeddingReport {
  std::string algebra;
  std::size_t dim_n = 0;
  Scalar lambda;
  std::uint64_t pairs_checked = 0;
  bool pass = false;
  std::string first_mismatch;
};

// Structure constants of g_(1,0) + g_(0,1) + g_(1,1) + g_(2,1) + g_(1,2) against the
// abstract algebra of ex.cubic, up to one overall scalar.
EmbeddingReport verify_embedding(const ChevalleyAlgebra& alg, const Extraction& ex);
nlohmann::json to_json(const EmbeddingReport& r);

struct TernaryReport {
  std::string algebra;
  std::size_t dim_g = 0;
  std::size_t p = 0;
  long dim_h = 0;  // dim g - 8 - 6p
  std::map<Bidegree, std::size_t> piece_dims;
  // dim of the (0,0) piece minus the sl(U) Cartan and root spaces it carries
  long dim_h_from_grading = 0;
  bool consistent = false;
};

TernaryReport ternary_dimension_check(const ChevalleyAlgebra& alg, const Extraction& ex);
nlohmann::json to_json(const TernaryReport& r);

nlohmann::json grading_json(const ChevalleyAlgebra& alg, const Extraction& ex);

}  // namespace nilcontact
