#include "nilcontact/contact.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "nilcontact/errors.hpp"

namespace nilcontact {

Vec ChartPoint::coordinates() const {
  Vec c{y, z};
  const Vec rest = chart.coordinates();
  c.insert(c.end(), rest.begin(), rest.end());
  return c;
}

ChartPoint ChartPoint::from_coordinates(std::size_t p, const Vec& c) {
  require_dim(c.size(), 2 * p + 4, "ChartPoint::from_coordinates");
  return {ChartElem::from_coordinates(p, Vec(c.begin() + 2, c.end())), c[1], c[0]};
}

ChartPoint ChartPoint::base(std::size_t p, Scalar y) { return {ChartElem::zero(p), Scalar(0), std::move(y)}; }

Scalar theta(const ChartElem& x, const ChartElem& z, const NilpotentAlgebra& alg) {
  alg.require_assumption("theta");
  require_dim(x.dim(), alg.p(), "theta");
  require_dim(z.dim(), alg.p(), "theta");
  const NElem u = exp_diff_inv(x.to_nelem(), z.to_nelem(), alg.cubic());
  return u.n3[kEm];
}

Scalar theta_tilde(const ChartPoint& pt, const ChartTangent& v, const NilpotentAlgebra& alg) {
  require_dim(pt.dim(), alg.p(), "theta_tilde");
  require_dim(v.dchart.dim(), alg.p(), "theta_tilde");
  const NElem u = exp_diff_inv(pt.chart.to_nelem(), v.dchart.to_nelem(), alg.cubic());
  return pt.y * (u.n3[kEm] - pt.z * u.n3[kEll]);
}

std::vector<MPoly> theta_tilde_form(std::size_t p) {
  const ChartIndex ix{p};
  const std::size_t n = ix.size();
  auto var = [n](std::size_t k) { return MPoly::variable(n, k); };
  std::vector<MPoly> a(n, MPoly(n));
  a[ix.x3_1()] = var(ix.y());
  a[ix.x3_2()] = Scalar(-1) * (var(ix.y()) * var(ix.z()));
  for (std::size_t i = 0; i < p; ++i) {
    a[ix.x1(i)] = Scalar(1, 2) * (var(ix.y()) * var(ix.x2(i)));
    a[ix.x2(i)] = Scalar(-1, 2) * (var(ix.y()) * var(ix.x1(i)));
  }
  return a;
}

SkewMatrix::SkewMatrix(Matrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || m_.rows() % 2 != 0) throw InputError("SkewMatrix: not square of even size");
  for (std::size_t r = 0; r < m_.rows(); ++r) {
    for (std::size_t c = r; c < m_.cols(); ++c) {
      if (m_(r, c) != -m_(c, r)) throw InputError("SkewMatrix: not antisymmetric");
    }
  }
}

Scalar SkewMatrix::determinant() const { return nilcontact::determinant(m_); }

Scalar SkewMatrix::pairing(const Vec& a, const Vec& b) const {
  require_dim(a.size(), dim(), "SkewMatrix::pairing");
  require_dim(b.size(), dim(), "SkewMatrix::pairing");
  return dot(a, m_ * b);
}

namespace {

// Partial derivatives d_j a_k, computed once per p.
const std::vector<std::vector<MPoly>>& form_jacobian(std::size_t p) {
  static thread_local std::map<std::size_t, std::vector<std::vector<MPoly>>> cache;
  auto it = cache.find(p);
  if (it != cache.end()) return it->second;
  const auto a = theta_tilde_form(p);
  const std::size_t n = a.size();
  std::vector<std::vector<MPoly>> d(n, std::vector<MPoly>(n));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) d[j][k] = a[k].derivative(j);
  }
  return cache.emplace(p, std::move(d)).first->second;
}

}  // namespace

SkewMatrix dtheta_matrix(const ChartPoint& pt) {
  if (pt.y == 0) throw PreconditionError("dtheta_matrix: fibre coordinate y is zero");
  const std::size_t p = pt.dim();
  const auto& d = form_jacobian(p);
  const Vec x = pt.coordinates();
  const std::size_t n = x.size();
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) {
      Scalar v = d[j][k].evaluate(x) - d[k][j].evaluate(x);
      m(k, j) = -v;
      m(j, k) = std::move(v);
    }
  }
  return SkewMatrix(std::move(m));
}

ChartPoint random_chart_point(std::size_t p, Rng& rng) {
  ChartPoint pt = ChartPoint::base(p);
  pt.y = rng.nonzero_rational();
  pt.z = rng.rational();
  pt.chart.x3 = {rng.rational(), rng.rational()};
  pt.chart.x1 = rng.vec(p);
  pt.chart.x2 = Covec(rng.vec(p));
  return pt;
}

NondegeneracyReport nondegeneracy_certificate(const NilpotentAlgebra& alg, std::uint64_t samples, std::uint64_t seed) {
  NondegeneracyReport r;
  r.cubic_hash = alg.hash();
  r.p = alg.p();
  r.samples = samples;
  r.seed = seed;
  r.assumption_ok = alg.assumption_ok();
  Rng rng = Rng::derived(seed, 0x636f6e74ULL);
  bool have_min = false;
  for (std::uint64_t s = 0; s < samples; ++s) {
    const ChartPoint pt = random_chart_point(alg.p(), rng);
    Scalar det = dtheta_matrix(pt).determinant();
    if (det == 0) {
      r.failures.push_back(s);
    } else {
      mpz_class num = abs(det.get_num());
      const std::size_t digits = num.get_str().size();
      r.min_abs_det_num_digits = have_min ? std::min(r.min_abs_det_num_digits, digits) : digits;
      have_min = true;
    }
    r.determinants.push_back(std::move(det));
  }
  return r;
}

nlohmann::json to_json(const NondegeneracyReport& r) {
  nlohmann::json dets = nlohmann::json::array();
  for (const auto& d : r.determinants) dets.push_back(format_scalar(d));
  return {{"cubic_hash", r.cubic_hash},
          {"p", r.p},
          {"samples", r.samples},
          {"seed", r.seed},
          {"assumption_ok", r.assumption_ok},
          {"min_abs_det_num_digits", r.min_abs_det_num_digits},
          {"failures", r.failures},
          {"determinants", std::move(dets)}};
}

Matrix pairing_matrix_D(std::size_t p) {
  const SkewMatrix full = dtheta_matrix(ChartPoint::base(p));
  const ChartIndex ix{p};
  std::vector<std::size_t> keep{ix.z(), ix.x3_2()};
  for (std::size_t i = 0; i < p; ++i) keep.push_back(ix.x1(i));
  for (std::size_t i = 0; i < p; ++i) keep.push_back(ix.x2(i));
  Matrix m(keep.size(), keep.size());
  for (std::size_t a = 0; a < keep.size(); ++a) {
    for (std::size_t b = 0; b < keep.size(); ++b) m(a, b) = full(keep[a], keep[b]);
  }
  return m;
}

Scalar symplectic_pairing_D(const DVector& a, const DVector& b, std::size_t p) {
  require_dim(a.dchart.dim(), p, "symplectic_pairing_D");
  require_dim(b.dchart.dim(), p, "symplectic_pairing_D");
  if (!a.in_d() || !b.in_d()) throw PreconditionError("symplectic_pairing_D: vector not in D");
  auto coords = [](const DVector& d) {
    Vec c{d.dz, d.dchart.x3[1]};
    c.insert(c.end(), d.dchart.x1.begin(), d.dchart.x1.end());
    c.insert(c.end(), d.dchart.x2.coords.begin(), d.dchart.x2.coords.end());
    return c;
  };
  return dot(coords(a), pairing_matrix_D(p) * coords(b));
}

Vec ProjectivePoint::coordinates() const {
  Vec out = v;
  out.insert(out.end(), b.coords.begin(), b.coords.end());
  out.push_back(c);
  out.push_back(t);
  return out;
}

bool ProjectivePoint::is_zero() const { return nilcontact::is_zero(coordinates()); }

bool ProjectivePoint::same_point(const ProjectivePoint& o) const {
  const Vec a = coordinates(), b2 = o.coordinates();
  if (a.size() != b2.size() || nilcontact::is_zero(a) || nilcontact::is_zero(b2)) return false;
  std::size_t i = 0;
  while (a[i] == 0) ++i;
  if (b2[i] == 0) return false;
  const Scalar ratio = b2[i] / a[i];
  return ratio * a == b2;
}

ProjectivePoint tau(const Vec& v, const SymCubic& t) {
  require_dim(v.size(), t.dim(), "tau");
  return {v, polarize(t, v, v), cubic_eval(t, v), Scalar(1)};
}

ProjectivePoint tau_closure_sample(const Vec& v, const Scalar& t, const SymCubic& cubic) {
  require_dim(v.size(), cubic.dim(), "tau_closure_sample");
  if (is_zero(v) && t == 0) throw InputError("tau_closure_sample: v and t both zero");
  if (t != 0) return {(t * t) * v, t * polarize(cubic, v, v), cubic_eval(cubic, v), t * t * t};
  // limit as t -> 0: the lowest order in t that does not vanish
  const Scalar c = cubic_eval(cubic, v);
  if (c != 0) return {zero_vec(v.size()), Covec(zero_vec(v.size())), c, 0};
  const Covec b = polarize(cubic, v, v);
  if (!is_zero(b.coords)) return {zero_vec(v.size()), b, 0, 0};
  return {v, Covec(zero_vec(v.size())), 0, 0};
}

const LineConstants& line_expansion_constants() {
  static const LineConstants constants = [] {
    const NilpotentAlgebra x3(SymCubic(1, {{Triple{0, 0, 0}, Scalar(1)}}));
    const LineSolution s = solve_line_coordinates(Vec{Scalar(1)}, x3);
    if (s.z.size() < 2) throw std::logic_error("line_expansion_constants: degenerate solve");
    // v = 1, B(v, v) = 1, c(v) = 1
    LineConstants c{s.z[1].x1[0], s.z[1].x2[0], s.z[1].x3[1]};
    if (c.s1 == 0 || c.s2 == 0 || c.s3 == 0) throw std::logic_error("line_expansion_constants: zero constant");
    return c;
  }();
  return constants;
}

bool tau_matches_line_expansion(const Vec& v, const NilpotentAlgebra& alg, const LineConstants& s) {
  const LineSolution sol = solve_line_coordinates(v, alg);
  const ChartElem d1 = sol.z.size() > 1 ? sol.z[1] : ChartElem::zero(alg.p());
  return d1.x1 == s.s1 * v && d1.x2 == s.s2 * polarize(alg.cubic(), v, v) && d1.x3[0] == 0 &&
         d1.x3[1] == s.s3 * cubic_eval(alg.cubic(), v);
}

}  // namespace nilcontact
