#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "nilcontact/nilpotent.hpp"

namespace nilcontact {

// Truncated Campbell-Hausdorff series; exact because n is 3-step nilpotent.
// Works for any element type with +, -, scalar * and a bracket callable.
template <class E, class Br>
E bch_with(const E& x, const E& y, Br br) {
  const E xy = br(x, y);
  E out = x + y;
  out += Scalar(1, 2) * xy;
  out += Scalar(1, 12) * br(x, xy);
  out -= Scalar(1, 12) * br(y, xy);
  return out;
}

NElem bch(const NElem& x, const NElem& y, const SymCubic& t);

// exp(log) in logarithmic coordinates.
struct GroupElem {
  NElem log;

  static GroupElem identity(std::size_t p) { return {NElem::zero(p)}; }
  friend bool operator==(const GroupElem& a, const GroupElem& b) { return a.log == b.log; }
};

GroupElem group_mul(const GroupElem& a, const GroupElem& b, const SymCubic& t);
GroupElem group_inv(const GroupElem& a);

// e_X(Y) = Y + [X, Y]/2 + [X, [X, Y]]/12, the differential of exp at X.
NElem exp_diff(const NElem& x, const NElem& y, const SymCubic& t);
// The exact Y with e_X(Y) = Z, solved one grade at a time.
NElem exp_diff_inv(const NElem& x, const NElem& z, const SymCubic& t);

// Chart coordinates on the complement n_m of a_l = V (x) l:
//   X1  coefficient of (x) f_2,
//   X2  the V* coordinate, stored with the opposite sign to the n2 component,
//   X3  (X3^1, X3^2) = (f_2-coordinate, f_1-coordinate) of the n3 component.
// The sign on X2 is what makes the chart contact form read
// y(dX3^1 - z dX3^2) + (y/2)(X2 dX1 - X1 dX2) with omega(f_1, f_2) = +1.
struct ChartElem {
  Vec x1;
  Covec x2;
  std::array<Scalar, 2> x3;

  static ChartElem zero(std::size_t p);
  std::size_t dim() const { return x1.size(); }

  NElem to_nelem() const;
  // Throws PreconditionError if x has a nonzero V (x) f_1 component.
  static ChartElem from_nelem(const NElem& x);

  // Flat coordinates (X3^1, X3^2, X1, X2), length 2p + 2.
  Vec coordinates() const;
  static ChartElem from_coordinates(std::size_t p, const Vec& c);

  friend bool operator==(const ChartElem& a, const ChartElem& b) {
    return a.x1 == b.x1 && a.x2 == b.x2 && a.x3 == b.x3;
  }
};

// Polynomial in one variable with coefficients in n; coeffs[k] multiplies z^k.
class NPoly {
public:
  NPoly() = default;
  explicit NPoly(std::size_t p) : p_(p) {}
  static NPoly constant(const NElem& c);
  // c * z^k
  static NPoly monomial(const NElem& c, std::size_t k);

  std::size_t p() const { return p_; }
  std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  const std::vector<NElem>& coeffs() const { return coeffs_; }
  // Zero element past the stored degree.
  NElem coeff(std::size_t k) const;
  NElem evaluate(const Scalar& z) const;
  NPoly grade(int g) const;

  NPoly& operator+=(const NPoly& o);
  NPoly& operator-=(const NPoly& o);
  NPoly& operator*=(const Scalar& s);
  friend NPoly operator+(NPoly a, const NPoly& b) { return a += b; }
  friend NPoly operator-(NPoly a, const NPoly& b) { return a -= b; }
  friend NPoly operator*(const Scalar& s, NPoly a) { return a *= s; }
  friend bool operator==(const NPoly& a, const NPoly& b) { return a.p_ == b.p_ && a.coeffs_ == b.coeffs_; }

  friend NPoly bracket(const NPoly& a, const NPoly& b, const SymCubic& t);

private:
  void trim();

  std::size_t p_ = 0;
  std::vector<NElem> coeffs_;
};

NPoly bch(const NPoly& x, const NPoly& y, const SymCubic& t);

// Solution of exp(v (x) f_1) = exp(Z) exp(w (x) (f_1 + z f_2)) with Z in n_m, as
// polynomials in z.
struct LineSolution {
  NPoly z_log;                 // Z in n coordinates
  std::vector<ChartElem> z;    // Z in chart coordinates, z[k] multiplies z^k
  Vec w;                       // constant in z
  NPoly w_log;                 // w (x) (f_1 + z f_2)
};

// Requires the assumption on B.
LineSolution solve_line_coordinates(const Vec& v, const NilpotentAlgebra& alg);

}  // namespace nilcontact
