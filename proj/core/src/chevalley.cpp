#include "nilcontact/chevalley.hpp"

#include <stdexcept>

#include "nilcontact/errors.hpp"

namespace nilcontact {

namespace {

bool positive(const Root& r) { return RootSystem::height(r) > 0; }

// Exact integer quotient, or a logic error if the convention produced a fraction.
std::int64_t exact(const Scalar& q, const char* what) {
  if (q.get_den() != 1) throw std::logic_error(std::string("chevalley: non-integral constant in ") + what);
  return q.get_num().get_si();
}

}  // namespace

std::int64_t ChevalleyAlgebra::n_const(const Root& a, const Root& b) const {
  const Root c = a + b;
  if (!rs_.is_root(c)) return 0;
  if (positive(a) && positive(b)) return npos_.at({*rs_.index_of(a), *rs_.index_of(b)});
  if (!positive(a) && !positive(b)) return -n_const(-a, -b);
  if (!positive(a)) return -n_const(b, a);
  // a > 0 > b
  if (positive(c)) {
    // from a + b - c = 0: N_{-a,-b}/(c,c) = N_{-b,c}/(a,a)
    return exact(frac(-rs_.inner(c, c), rs_.inner(a, a)) * n_const(-b, c), "mixed pair");
  }
  return -n_const(-a, -b);
}

ChevalleyAlgebra::ChevalleyAlgebra(RootSystem rs) : rs_(std::move(rs)) {
  const auto& roots = rs_.roots();
  const std::size_t npos = rs_.num_positive();
  const int r = rs_.rank();

  for (std::size_t x = 0; x < npos; ++x) {
    const Root& xi = roots[x];
    if (RootSystem::height(xi) == 1) continue;
    int first = -1;
    for (int i = 0; i < r && first < 0; ++i) {
      if (rs_.is_root(xi - rs_.simple_root(i))) first = i;
    }
    const Root alpha = rs_.simple_root(first);
    const Root beta = xi - alpha;
    int strand = 0;
    for (Root t = beta - alpha; rs_.is_root(t); t = t - alpha) ++strand;
    const std::size_t ia = *rs_.index_of(alpha), ib = *rs_.index_of(beta);
    const std::int64_t n_ab = strand + 1;
    npos_[{ia, ib}] = n_ab;
    npos_[{ib, ia}] = -n_ab;

    const Scalar xx = rs_.inner(xi, xi);
    for (std::size_t g = 0; g < npos; ++g) {
      const Root& gamma = roots[g];
      const Root delta = xi - gamma;
      if (!rs_.is_root(delta) || !positive(delta)) continue;
      const std::size_t id = *rs_.index_of(delta);
      if ((g == ia && id == ib) || (g == ib && id == ia)) continue;
      // four roots alpha + beta - gamma - delta = 0, none opposite
      Scalar sum = 0;
      const Root bg = beta - gamma, ag = alpha - gamma;
      if (rs_.is_root(bg)) {
        sum += frac(n_const(beta, -gamma) * n_const(alpha, -delta), rs_.inner(bg, bg));
      }
      if (rs_.is_root(ag)) {
        sum += frac(n_const(-gamma, alpha) * n_const(beta, -delta), rs_.inner(ag, ag));
      }
      npos_[{g, id}] = exact(xx * sum / n_ab, "positive pair");
    }
  }

  const std::size_t d = rank() + roots.size();
  table_ = StructureTable<std::int64_t>(d);
  for (std::size_t bi = 0; bi < roots.size(); ++bi) {
    const Root& b = roots[bi];
    const std::size_t eb = root_basis_index(bi);
    for (int i = 0; i < r; ++i) {
      const std::int64_t v = rs_.pairing(b, rs_.simple_root(i));
      if (v == 0) continue;
      table_.set(static_cast<std::size_t>(i), eb, {{eb, v}});
      table_.set(eb, static_cast<std::size_t>(i), {{eb, -v}});
    }
    for (std::size_t ci = 0; ci < roots.size(); ++ci) {
      const Root& c = roots[ci];
      const Root s = b + c;
      const std::size_t ec = root_basis_index(ci);
      if (s == Root(r, 0)) {
        // [e_b, e_-b] = h_b
        SparseVec<std::int64_t> h;
        const int bb = rs_.inner(b, b);
        for (int k = 0; k < r; ++k) {
          if (b[k] == 0) continue;
          h.emplace_back(static_cast<std::size_t>(k), b[k] * rs_.gram()[k][k] / bb);
        }
        table_.set(eb, ec, std::move(h));
      } else if (auto si = rs_.index_of(s)) {
        table_.set(eb, ec, {{root_basis_index(*si), n_const(b, c)}});
      }
    }
  }

  qtable_ = StructureTable<Scalar>(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      SparseVec<Scalar> q;
      for (const auto& [k, v] : table_(i, j)) q.emplace_back(k, Scalar(static_cast<long>(v)));
      qtable_.set(i, j, std::move(q));
    }
  }
}

std::size_t ChevalleyAlgebra::root_basis_index(const Root& r) const {
  auto i = rs_.index_of(r);
  if (!i) throw InputError("chevalley: " + format_root(r) + " is not a root");
  return root_basis_index(*i);
}

std::string ChevalleyAlgebra::label(std::size_t basis_index) const {
  if (is_cartan(basis_index)) return "h" + std::to_string(basis_index + 1);
  return "e" + format_root(root_of(basis_index));
}

Scalar CorootElement::eval(const RootSystem& rs, const Root& beta) const {
  Scalar s = 0;
  for (int i = 0; i < rs.rank(); ++i) s += coefficients[i] * rs.pairing(beta, rs.simple_root(i));
  return s;
}

CorootElement coroot_element(const ChevalleyAlgebra& alg, const Root& root) {
  const RootSystem& rs = alg.roots();
  if (!rs.is_root(root)) throw InputError("coroot_element: " + format_root(root) + " is not a root");
  CorootElement h{root, zero_vec(alg.rank())};
  const int rr = rs.inner(root, root);
  for (int k = 0; k < rs.rank(); ++k) h.coefficients[k] = frac(root[k] * rs.gram()[k][k], rr);
  return h;
}

std::vector<std::size_t> FiveStepGrading::dims() const {
  std::vector<std::size_t> d;
  for (const auto& p : pieces) d.push_back(p.size());
  return d;
}

FiveStepGrading five_step_grading(const ChevalleyAlgebra& alg) {
  const RootSystem& rs = alg.roots();
  const Root& psi = rs.highest_root();
  FiveStepGrading g;
  g.pieces.resize(5);
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    const int e = alg.is_cartan(i) ? 0 : rs.pairing(alg.root_of(i), psi);
    if (e < -2 || e > 2) throw std::logic_error("five_step_grading: eigenvalue outside [-2, 2]");
    g.pieces[static_cast<std::size_t>(e + 2)].push_back(i);
  }
  return g;
}

}  // namespace nilcontact
