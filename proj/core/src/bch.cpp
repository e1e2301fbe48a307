#include "nilcontact/bch.hpp"

#include "nilcontact/errors.hpp"

namespace nilcontact {

NElem bch(const NElem& x, const NElem& y, const SymCubic& t) {
  return bch_with(x, y, [&t](const NElem& a, const NElem& b) { return bracket(a, b, t); });
}

GroupElem group_mul(const GroupElem& a, const GroupElem& b, const SymCubic& t) { return {bch(a.log, b.log, t)}; }

GroupElem group_inv(const GroupElem& a) { return {-a.log}; }

NElem exp_diff(const NElem& x, const NElem& y, const SymCubic& t) {
  const NElem xy = bracket(x, y, t);
  NElem out = y;
  out += Scalar(1, 2) * xy;
  out += Scalar(1, 12) * bracket(x, xy, t);
  return out;
}

NElem exp_diff_inv(const NElem& x, const NElem& z, const SymCubic& t) {
  require_dim(x.dim(), t.dim(), "exp_diff_inv");
  require_dim(z.dim(), t.dim(), "exp_diff_inv");
  // grade g of e_X(Y) is Y_g plus terms in lower grades of Y
  NElem y = NElem::zero(t.dim());
  for (int g = 1; g <= 3; ++g) y += (z - exp_diff(x, y, t)).grade(g);
  return y;
}

ChartElem ChartElem::zero(std::size_t p) { return {zero_vec(p), Covec(p), {Scalar(0), Scalar(0)}}; }

NElem ChartElem::to_nelem() const {
  NElem e = NElem::zero(dim());
  e.n1[kEm] = x1;
  e.n2 = -x2;
  e.n3[kEm] = x3[0];
  e.n3[kEll] = x3[1];
  return e;
}

ChartElem ChartElem::from_nelem(const NElem& x) {
  if (!is_zero(x.n1[kEll])) throw PreconditionError("ChartElem::from_nelem: element has a V (x) f_1 component");
  return {x.n1[kEm], -x.n2, {x.n3[kEm], x.n3[kEll]}};
}

Vec ChartElem::coordinates() const {
  Vec c{x3[0], x3[1]};
  c.insert(c.end(), x1.begin(), x1.end());
  c.insert(c.end(), x2.coords.begin(), x2.coords.end());
  return c;
}

ChartElem ChartElem::from_coordinates(std::size_t p, const Vec& c) {
  require_dim(c.size(), 2 * p + 2, "ChartElem::from_coordinates");
  ChartElem e = zero(p);
  e.x3 = {c[0], c[1]};
  for (std::size_t i = 0; i < p; ++i) {
    e.x1[i] = c[2 + i];
    e.x2[i] = c[2 + p + i];
  }
  return e;
}

NPoly NPoly::constant(const NElem& c) { return monomial(c, 0); }

NPoly NPoly::monomial(const NElem& c, std::size_t k) {
  NPoly out(c.dim());
  out.coeffs_.assign(k + 1, NElem::zero(c.dim()));
  out.coeffs_[k] = c;
  out.trim();
  return out;
}

NElem NPoly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : NElem::zero(p_); }

NElem NPoly::evaluate(const Scalar& z) const {
  NElem out = NElem::zero(p_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    out *= z;
    out += *it;
  }
  return out;
}

NPoly NPoly::grade(int g) const {
  NPoly out(p_);
  for (const auto& c : coeffs_) out.coeffs_.push_back(c.grade(g));
  out.trim();
  return out;
}

void NPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

NPoly& NPoly::operator+=(const NPoly& o) {
  require_dim(o.p_, p_, "NPoly addition");
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), NElem::zero(p_));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

NPoly& NPoly::operator-=(const NPoly& o) {
  require_dim(o.p_, p_, "NPoly subtraction");
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), NElem::zero(p_));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

NPoly& NPoly::operator*=(const Scalar& s) {
  for (auto& c : coeffs_) c *= s;
  trim();
  return *this;
}

NPoly bracket(const NPoly& a, const NPoly& b, const SymCubic& t) {
  require_dim(b.p_, a.p_, "NPoly bracket");
  NPoly out(a.p_);
  if (a.coeffs_.empty() || b.coeffs_.empty()) return out;
  out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, NElem::zero(a.p_));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out.coeffs_[i + j] += bracket(a.coeffs_[i], b.coeffs_[j], t);
  }
  out.trim();
  return out;
}

NPoly bch(const NPoly& x, const NPoly& y, const SymCubic& t) {
  return bch_with(x, y, [&t](const NPoly& a, const NPoly& b) { return bracket(a, b, t); });
}

LineSolution solve_line_coordinates(const Vec& v, const NilpotentAlgebra& alg) {
  alg.require_assumption("solve_line_coordinates");
  const std::size_t p = alg.p();
  require_dim(v.size(), p, "solve_line_coordinates");
  const SymCubic& t = alg.cubic();

  NElem target = NElem::zero(p);
  target.n1[kEll] = v;

  // Grade 1: the f_1 column forces w = v, the f_2 column then gives Z_1 = -z v (x) f_2.
  LineSolution s;
  s.w = v;
  NElem w_ell = NElem::zero(p), w_m = NElem::zero(p), z1 = NElem::zero(p);
  w_ell.n1[kEll] = v;
  w_m.n1[kEm] = v;
  z1.n1[kEm] = -v;
  s.w_log = NPoly::constant(w_ell) + NPoly::monomial(w_m, 1);
  s.z_log = NPoly::monomial(z1, 1);

  // Grades 2 and 3: Z_g enters H(Z, W)_g with coefficient one.
  const NPoly x = NPoly::constant(target);
  for (int g = 2; g <= 3; ++g) s.z_log += (x - bch(s.z_log, s.w_log, t)).grade(g);

  for (const auto& c : s.z_log.coeffs()) s.z.push_back(ChartElem::from_nelem(c));
  return s;
}

}  // namespace nilcontact
