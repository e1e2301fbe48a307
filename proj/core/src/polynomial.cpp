#include "nilcontact/polynomial.hpp"

#include <algorithm>
#include <numeric>

#include "nilcontact/errors.hpp"

namespace nilcontact {

MPoly MPoly::constant(std::size_t nvars, const Scalar& c) {
  MPoly p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

MPoly MPoly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw InputError("MPoly::variable: index out of range");
  MPoly p(nvars);
  Exponents e(nvars, 0);
  e[index] = 1;
  p.add_term(e, Scalar(1));
  return p;
}

std::size_t MPoly::degree() const {
  std::size_t d = 0;
  for (const auto& [e, c] : terms_) {
    d = std::max<std::size_t>(d, std::accumulate(e.begin(), e.end(), std::size_t{0}));
  }
  return d;
}

void MPoly::add_term(const Exponents& e, const Scalar& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MPoly MPoly::derivative(std::size_t var) const {
  if (var >= nvars_) throw InputError("MPoly::derivative: variable out of range");
  MPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents d = e;
    --d[var];
    out.add_term(d, c * e[var]);
  }
  return out;
}

Scalar MPoly::evaluate(const Vec& point) const {
  require_dim(point.size(), nvars_, "MPoly::evaluate");
  Scalar total = 0;
  for (const auto& [e, c] : terms_) {
    Scalar term = c;
    for (std::size_t i = 0; i < nvars_ && term != 0; ++i) {
      for (std::uint16_t k = 0; k < e[i]; ++k) term *= point[i];
    }
    total += term;
  }
  return total;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  require_dim(o.nvars_, nvars_, "MPoly addition");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  require_dim(o.nvars_, nvars_, "MPoly subtraction");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MPoly& MPoly::operator*=(const Scalar& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  require_dim(b.nvars_, a.nvars_, "MPoly product");
  MPoly out(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      MPoly::Exponents e(a.nvars_);
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

}  // namespace nilcontact
