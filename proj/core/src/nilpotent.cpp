#include "nilcontact/nilpotent.hpp"

#include "nilcontact/errors.hpp"

namespace nilcontact {

NElem NElem::zero(std::size_t p) {
  return NElem{{zero_vec(p), zero_vec(p)}, Covec(p), {Scalar(0), Scalar(0)}};
}

NElem NElem::grade(int g) const {
  NElem out = zero(dim());
  if (g == 1) out.n1 = n1;
  if (g == 2) out.n2 = n2;
  if (g == 3) out.n3 = n3;
  return out;
}

bool NElem::is_zero() const {
  return nilcontact::is_zero(n1[0]) && nilcontact::is_zero(n1[1]) && n2.is_zero() && n3[0] == 0 && n3[1] == 0;
}

NElem& NElem::operator+=(const NElem& o) {
  require_dim(o.dim(), dim(), "NElem addition");
  n1[0] += o.n1[0];
  n1[1] += o.n1[1];
  n2 += o.n2;
  n3[0] += o.n3[0];
  n3[1] += o.n3[1];
  return *this;
}

NElem& NElem::operator-=(const NElem& o) {
  require_dim(o.dim(), dim(), "NElem subtraction");
  n1[0] -= o.n1[0];
  n1[1] -= o.n1[1];
  n2 -= o.n2;
  n3[0] -= o.n3[0];
  n3[1] -= o.n3[1];
  return *this;
}

NElem& NElem::operator*=(const Scalar& s) {
  for (auto& col : n1) {
    for (auto& x : col) x *= s;
  }
  n2 *= s;
  n3[0] *= s;
  n3[1] *= s;
  return *this;
}

std::size_t n_dim(std::size_t p) { return 3 * p + 2; }

NElem n_basis(std::size_t p, std::size_t index) {
  if (index >= n_dim(p)) throw InputError("n_basis: index out of range");
  NElem e = NElem::zero(p);
  if (index < 2 * p) {
    e.n1[index / p][index % p] = 1;
  } else if (index < 3 * p) {
    e.n2[index - 2 * p] = 1;
  } else {
    e.n3[index - 3 * p] = 1;
  }
  return e;
}

Vec n_coordinates(const NElem& x) {
  const std::size_t p = x.dim();
  Vec c;
  c.reserve(n_dim(p));
  for (const auto& col : x.n1) c.insert(c.end(), col.begin(), col.end());
  c.insert(c.end(), x.n2.coords.begin(), x.n2.coords.end());
  c.push_back(x.n3[0]);
  c.push_back(x.n3[1]);
  return c;
}

NElem n_from_coordinates(std::size_t p, const Vec& coords) {
  require_dim(coords.size(), n_dim(p), "n_from_coordinates");
  NElem e = NElem::zero(p);
  for (std::size_t i = 0; i < p; ++i) {
    e.n1[0][i] = coords[i];
    e.n1[1][i] = coords[p + i];
    e.n2[i] = coords[2 * p + i];
  }
  e.n3 = {coords[3 * p], coords[3 * p + 1]};
  return e;
}

int n_basis_degree(std::size_t p, std::size_t index) {
  if (index >= n_dim(p)) throw InputError("n_basis_degree: index out of range");
  return index < 2 * p ? 1 : (index < 3 * p ? 2 : 3);
}

NElem bracket(const NElem& x, const NElem& y, const SymCubic& t) {
  const std::size_t p = t.dim();
  require_dim(x.dim(), p, "bracket");
  require_dim(y.dim(), p, "bracket");
  NElem out = NElem::zero(p);
  out.n2 = polarize(t, x.n1[kEll], y.n1[kEm]) - polarize(t, x.n1[kEm], y.n1[kEll]);
  for (std::size_t a = 0; a < 2; ++a) out.n3[a] = x.n2(y.n1[a]) - y.n2(x.n1[a]);
  return out;
}

SlWElem::SlWElem(Scalar a11, Scalar a12, Scalar a21, Scalar a22) {
  if (a11 + a22 != 0) throw InputError("SlWElem: matrix is not traceless");
  m_ = {{{std::move(a11), std::move(a12)}, {std::move(a21), std::move(a22)}}};
}

std::array<Scalar, 2> SlWElem::apply(const std::array<Scalar, 2>& w) const {
  return {m_[0][0] * w[0] + m_[0][1] * w[1], m_[1][0] * w[0] + m_[1][1] * w[1]};
}

SlWElem SlWElem::h() { return SlWElem(1, 0, 0, -1); }
SlWElem SlWElem::e() { return SlWElem(0, 1, 0, 0); }
SlWElem SlWElem::f() { return SlWElem(0, 0, 1, 0); }

NElem act_slw(const SlWElem& g, const NElem& x) {
  const std::size_t p = x.dim();
  NElem out = NElem::zero(p);
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < 2; ++c) {
      if (g(r, c) == 0) continue;
      out.n1[r] += g(r, c) * x.n1[c];
    }
  }
  out.n3 = g.apply(x.n3);
  return out;
}

NilpotentAlgebra::NilpotentAlgebra(SymCubic t)
    : cubic_(std::move(t)), b_rank_(nilcontact::b_rank(cubic_)), hash_(cubic_hash(cubic_)), table_(n_dim(cubic_.dim())) {
  const std::size_t p = cubic_.dim();
  const std::size_t d = n_dim(p);
  std::vector<NElem> basis;
  basis.reserve(d);
  for (std::size_t i = 0; i < d; ++i) basis.push_back(n_basis(p, i));
  for (std::size_t i = 0; i < d; ++i) {
    // degree 3 is central and degree >= 4 vanishes
    if (n_basis_degree(p, i) == 3) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (n_basis_degree(p, i) + n_basis_degree(p, j) > 3) continue;
      const Vec c = n_coordinates(nilcontact::bracket(basis[i], basis[j], cubic_));
      SparseVec<Scalar> s;
      for (std::size_t k = 0; k < d; ++k) {
        if (c[k] != 0) s.emplace_back(k, c[k]);
      }
      table_.set(i, j, std::move(s));
    }
  }
}

void NilpotentAlgebra::require_assumption(const char* who) const {
  if (!assumption_ok()) {
    throw AssumptionViolated(std::string(who) + ": assumption violated, B has rank " + std::to_string(b_rank_) +
                             " < p = " + std::to_string(p()));
  }
}

JacobiReport verify_jacobi(const NilpotentAlgebra& alg) {
  JacobiReport r;
  r.cubic_hash = alg.hash();
  r.p = alg.p();
  r.dim_n = alg.dim();
  r.assumption_ok = alg.assumption_ok();
  auto res = alg.structure().jacobi_full();
  r.triples_checked = res.triples_checked;
  r.violations = std::move(res.violations);
  return r;
}

JacobiReport verify_jacobi(const SymCubic& t) { return verify_jacobi(NilpotentAlgebra(t)); }

nlohmann::json to_json(const JacobiReport& r) {
  nlohmann::json v = nlohmann::json::array();
  for (const auto& t : r.violations) v.push_back({t[0], t[1], t[2]});
  return {{"cubic_hash", r.cubic_hash},       {"p", r.p},
          {"dim_n", r.dim_n},                 {"triples_checked", r.triples_checked},
          {"jacobi_violations", std::move(v)}, {"assumption_ok", r.assumption_ok}};
}

DimReport dim_report(const SymCubic& t) {
  DimReport r;
  r.p = t.dim();
  r.dim_n = n_dim(r.p);
  // N has the dimension of n; the fibration removes the p-dimensional abelian a_l
  // and adds the base P(W).
  r.dim_group_plus_one_minus_p = r.dim_n + 1 - r.p;
  r.two_p_plus_three = 2 * r.p + 3;
  r.consistent = r.dim_group_plus_one_minus_p == r.two_p_plus_three;
  return r;
}

nlohmann::json to_json(const DimReport& r) {
  return {{"p", r.p},
          {"dim_n", r.dim_n},
          {"dim_N_plus_1_minus_p", r.dim_group_plus_one_minus_p},
          {"dim_X_c", r.two_p_plus_three},
          {"consistent", r.consistent}};
}

}  // namespace nilcontact
