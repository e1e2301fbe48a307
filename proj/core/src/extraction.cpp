#include "nilcontact/extraction.hpp"

#include <algorithm>

#include "nilcontact/errors.hpp"
#include "nilcontact/nilpotent.hpp"

namespace nilcontact {

namespace {

// Coefficient of basis vector k in [b_i, b_j].
std::int64_t coefficient(const ChevalleyAlgebra& alg, std::size_t i, std::size_t j, std::size_t k) {
  for (const auto& [idx, v] : alg.structure()(i, j)) {
    if (idx == k) return v;
  }
  return 0;
}

std::string bidegree_key(const Bidegree& d) { return "(" + std::to_string(d.first) + "," + std::to_string(d.second) + ")"; }

}  // namespace

int find_alpha(const RootSystem& rs) {
  const Root& psi = rs.highest_root();
  std::vector<int> candidates;
  for (int i = 0; i < rs.rank(); ++i) {
    if (rs.is_root(psi - rs.simple_root(i))) candidates.push_back(i);
  }
  if (candidates.size() != 1) {
    std::string msg = "type " + rs.name() + " rejected: psi - alpha is a root for " +
                      std::to_string(candidates.size()) + " simple roots";
    if (!candidates.empty()) {
      msg += " (";
      for (std::size_t c = 0; c < candidates.size(); ++c) {
        if (c) msg += ", ";
        msg += "alpha_" + std::to_string(candidates[c] + 1);
      }
      msg += ")";
    }
    msg += "; the construction needs exactly one";
    throw TypeRejected(msg);
  }
  return candidates.front();
}

const std::vector<std::size_t>& DoubleGrading::piece(int a, int b) const {
  static const std::vector<std::size_t> empty;
  auto it = pieces.find({a, b});
  return it == pieces.end() ? empty : it->second;
}

DoubleGrading double_grading(const ChevalleyAlgebra& alg) {
  const RootSystem& rs = alg.roots();
  DoubleGrading dg;
  dg.alpha = find_alpha(rs);
  const Root psi = rs.highest_root();
  const Root gamma = psi - rs.simple_root(dg.alpha);
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    Bidegree d{0, 0};
    if (!alg.is_cartan(i)) d = {rs.pairing(alg.root_of(i), psi), rs.pairing(alg.root_of(i), gamma)};
    if (std::abs(d.first) > 2 || std::abs(d.second) > 2) {
      throw TypeRejected("type " + rs.name() + " rejected: bidegree " + bidegree_key(d) + " outside [-2, 2]");
    }
    dg.degree.push_back(d);
    dg.pieces[d].push_back(i);
  }
  dg.e_psi = alg.root_basis_index(psi);
  dg.e_psi_alpha = alg.root_basis_index(gamma);
  if (dg.degree[dg.e_psi] != Bidegree{2, 1} || dg.degree[dg.e_psi_alpha] != Bidegree{1, 2} ||
      dg.piece(2, 1).size() != 1 || dg.piece(1, 2).size() != 1) {
    throw TypeRejected("type " + rs.name() + " rejected: psi has bidegree " + bidegree_key(dg.degree[dg.e_psi]) +
                       " and psi - alpha has " + bidegree_key(dg.degree[dg.e_psi_alpha]) +
                       ", expected (2,1) and (1,2)");
  }
  return dg;
}

PairingReport verify_pairings(const ChevalleyAlgebra& alg, const DoubleGrading& dg) {
  const auto& x = dg.piece(0, 1);
  const auto& xp = dg.piece(1, 0);
  const auto& y = dg.piece(1, 1);
  PairingReport r;
  r.p = y.size();
  if (x.size() != r.p || xp.size() != r.p) {
    throw TypeRejected("verify_pairings: pieces (0,1), (1,0), (1,1) have dimensions " + std::to_string(x.size()) +
                       ", " + std::to_string(xp.size()) + ", " + std::to_string(r.p));
  }
  r.p1 = Matrix(r.p, r.p);
  r.p2 = Matrix(r.p, r.p);
  for (std::size_t i = 0; i < r.p; ++i) {
    for (std::size_t m = 0; m < r.p; ++m) {
      r.p1(i, m) = static_cast<long>(coefficient(alg, x[i], y[m], dg.e_psi_alpha));
      r.p2(i, m) = static_cast<long>(coefficient(alg, xp[i], y[m], dg.e_psi));
    }
  }
  r.rank1 = rank(r.p1);
  r.rank2 = rank(r.p2);
  return r;
}

Extraction extract_cubic(const ChevalleyAlgebra& alg) {
  Extraction ex;
  ex.grading = double_grading(alg);
  ex.pairings = verify_pairings(alg, ex.grading);
  if (!ex.pairings.pass()) {
    throw TypeRejected("extract_cubic: pairings of " + alg.roots().name() + " are degenerate (ranks " +
                       std::to_string(ex.pairings.rank1) + ", " + std::to_string(ex.pairings.rank2) + " of " +
                       std::to_string(ex.pairings.p) + ")");
  }
  const std::size_t p = ex.pairings.p;
  const auto& x = ex.grading.piece(0, 1);
  const auto& xp = ex.grading.piece(1, 0);
  const auto& y = ex.grading.piece(1, 1);

  // [phi(X), Y] on e_psi equals [X, Y] on e_{psi - alpha}: phi = P1 P2^{-1}.
  ex.phi = ex.pairings.p1 * *inverse(ex.pairings.p2);

  std::map<std::size_t, std::size_t> y_pos;
  for (std::size_t m = 0; m < p; ++m) y_pos[y[m]] = m;

  // g[j][k][m]: coefficient of Y_m in [phi X_j, X_k]
  std::vector<std::vector<Vec>> g(p, std::vector<Vec>(p, zero_vec(p)));
  for (std::size_t l = 0; l < p; ++l) {
    for (std::size_t k = 0; k < p; ++k) {
      for (const auto& [idx, v] : alg.structure()(xp[l], x[k])) {
        const std::size_t m = y_pos.at(idx);
        for (std::size_t j = 0; j < p; ++j) {
          if (ex.phi(j, l) != 0) g[j][k][m] += ex.phi(j, l) * static_cast<long>(v);
        }
      }
    }
  }
  // F_ijk = [phi X_i, [phi X_j, X_k]] on e_psi = sum_m P1[i][m] g[j][k][m]
  auto f = [&](std::size_t i, std::size_t j, std::size_t k) {
    Scalar s = 0;
    for (std::size_t m = 0; m < p; ++m) {
      if (g[j][k][m] != 0 && ex.pairings.p1(i, m) != 0) s += ex.pairings.p1(i, m) * g[j][k][m];
    }
    return s;
  };
  std::map<Triple, Scalar> entries;
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = i; j < p; ++j) {
      for (std::size_t k = j; k < p; ++k) {
        Scalar s = 0;
        for (const auto& o : orderings({i, j, k})) s += f(o[0], o[1], o[2]);
        s /= static_cast<long>(orderings({i, j, k}).size());
        if (s != 0) entries.emplace(Triple{i, j, k}, s);
      }
    }
  }
  ex.raw = SymCubic(p, std::move(entries));
  ex.cubic = ex.raw.normalized();
  return ex;
}

EmbeddingReport verify_embedding(const ChevalleyAlgebra& alg, const Extraction& ex) {
  EmbeddingReport r;
  r.algebra = alg.roots().name();
  const std::size_t p = ex.pairings.p;
  const auto& x = ex.grading.piece(0, 1);
  const auto& xp = ex.grading.piece(1, 0);
  const auto& y = ex.grading.piece(1, 1);
  const NilpotentAlgebra n(ex.cubic);
  const std::size_t dn = n.dim();
  r.dim_n = dn;

  // Images of the abstract basis e_i f_1, e_i f_2, eps_i, f_1, f_2.
  const Matrix d = *inverse(ex.pairings.p1.transposed());
  std::vector<SparseVec<Scalar>> image(dn);
  for (std::size_t i = 0; i < p; ++i) {
    image[i] = {{x[i], Scalar(1)}};
    SparseVec<Scalar> phi_x, eps;
    for (std::size_t k = 0; k < p; ++k) {
      if (ex.phi(i, k) != 0) sparse_axpy(phi_x, ex.phi(i, k), SparseVec<Scalar>{{xp[k], Scalar(1)}});
      if (d(i, k) != 0) sparse_axpy(eps, Scalar(-d(i, k)), SparseVec<Scalar>{{y[k], Scalar(1)}});
    }
    image[p + i] = std::move(phi_x);
    image[2 * p + i] = std::move(eps);
  }
  image[3 * p] = {{ex.grading.e_psi_alpha, Scalar(1)}};
  image[3 * p + 1] = {{ex.grading.e_psi, Scalar(1)}};

  const auto& gt = alg.rational_structure();
  auto mapped = [&](const SparseVec<Scalar>& abstract) {
    SparseVec<Scalar> out;
    for (const auto& [k, c] : abstract) sparse_axpy(out, c, image[k]);
    return out;
  };

  // The scalar: compare one nonzero n1 x n1 bracket, then rescale degrees 2 and 3.
  bool have_lambda = false;
  for (std::size_t i = 0; i < p && !have_lambda; ++i) {
    for (std::size_t j = 0; j < p && !have_lambda; ++j) {
      const SparseVec<Scalar> rhs = mapped(n.structure()(i, p + j));
      if (rhs.empty()) continue;
      const SparseVec<Scalar> lhs = gt.bracket(image[i], image[p + j]);
      Scalar l = 0;
      for (const auto& [k, c] : lhs) {
        if (k == rhs.front().first) l = c;
      }
      r.lambda = l / rhs.front().second;
      have_lambda = true;
    }
  }
  if (!have_lambda || r.lambda == 0) {
    r.first_mismatch = "no nonzero bracket n1 x n1 to fix the scalar";
    return r;
  }
  for (std::size_t k = 2 * p; k < dn; ++k) {
    for (auto& [idx, c] : image[k]) c *= r.lambda;
  }

  r.pass = true;
  for (std::size_t a = 0; a < dn && r.pass; ++a) {
    for (std::size_t b = 0; b < dn; ++b) {
      ++r.pairs_checked;
      const SparseVec<Scalar> lhs = gt.bracket(image[a], image[b]);
      const SparseVec<Scalar> rhs = mapped(n.structure()(a, b));
      if (lhs != rhs) {
        r.pass = false;
        r.first_mismatch = "abstract basis pair (" + std::to_string(a) + ", " + std::to_string(b) + ")";
        break;
      }
    }
  }
  return r;
}

nlohmann::json to_json(const EmbeddingReport& r) {
  nlohmann::json j{{"algebra", r.algebra},
                   {"dim_n", r.dim_n},
                   {"lambda", format_scalar(r.lambda)},
                   {"pairs_checked", r.pairs_checked},
                   {"pass", r.pass}};
  j["first_mismatch"] = r.first_mismatch.empty() ? nlohmann::json(nullptr) : nlohmann::json(r.first_mismatch);
  return j;
}

TernaryReport ternary_dimension_check(const ChevalleyAlgebra& alg, const Extraction& ex) {
  TernaryReport r;
  r.algebra = alg.roots().name();
  r.dim_g = alg.dim();
  r.p = ex.pairings.p;
  r.dim_h = static_cast<long>(r.dim_g) - 8 - 6 * static_cast<long>(r.p);
  for (const auto& [deg, idx] : ex.grading.pieces) r.piece_dims[deg] = idx.size();
  auto dim_at = [&](int a, int b) {
    auto it = r.piece_dims.find({a, b});
    return it == r.piece_dims.end() ? std::size_t{0} : it->second;
  };
  // sl(U): Cartan of rank 2 inside (0,0) and six root lines; U (x) V and its dual on
  // the six remaining hexagon vertices.
  r.dim_h_from_grading = static_cast<long>(dim_at(0, 0)) - 2;
  bool ok = r.dim_h_from_grading == r.dim_h;
  for (const Bidegree& d : {Bidegree{2, 1}, Bidegree{1, 2}, Bidegree{1, -1}}) {
    ok = ok && dim_at(d.first, d.second) == 1 && dim_at(-d.first, -d.second) == 1;
  }
  for (const Bidegree& d : {Bidegree{1, 1}, Bidegree{-1, 0}, Bidegree{0, -1}}) {
    ok = ok && dim_at(d.first, d.second) == r.p && dim_at(-d.first, -d.second) == r.p;
  }
  std::size_t total = 0;
  for (const auto& [deg, n] : r.piece_dims) total += n;
  r.consistent = ok && r.piece_dims.size() == 13 && total == r.dim_g;
  return r;
}

nlohmann::json to_json(const TernaryReport& r) {
  nlohmann::json pieces = nlohmann::json::object();
  for (const auto& [d, n] : r.piece_dims) pieces[bidegree_key(d)] = n;
  return {{"algebra", r.algebra},         {"dim_g", r.dim_g},
          {"p", r.p},                     {"dim_h", r.dim_h},
          {"dim_h_from_grading", r.dim_h_from_grading}, {"piece_dims", std::move(pieces)},
          {"consistent", r.consistent}};
}

nlohmann::json grading_json(const ChevalleyAlgebra& alg, const Extraction& ex) {
  const RootSystem& rs = alg.roots();
  nlohmann::json five = nlohmann::json::array();
  for (auto n : five_step_grading(alg).dims()) five.push_back(n);
  nlohmann::json pieces = nlohmann::json::object();
  for (const auto& [d, idx] : ex.grading.pieces) pieces[bidegree_key(d)] = idx.size();
  return {{"algebra", rs.name()},
          {"dim_g", alg.dim()},
          {"highest_root", format_root(rs.highest_root())},
          {"alpha", "alpha_" + std::to_string(ex.grading.alpha + 1)},
          {"five_step_dims", std::move(five)},
          {"bidegree_dims", std::move(pieces)},
          {"p", ex.pairings.p},
          {"pairing_ranks", {ex.pairings.rank1, ex.pairings.rank2}}};
}

}  // namespace nilcontact
