#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "nilcontact/scalar.hpp"

namespace nilcontact {

// Sparse multivariate polynomial over Q in a fixed number of variables.
class MPoly {
public:
  using Exponents = std::vector<std::uint16_t>;

  MPoly() = default;
  explicit MPoly(std::size_t nvars) : nvars_(nvars) {}

  static MPoly constant(std::size_t nvars, const Scalar& c);
  static MPoly variable(std::size_t nvars, std::size_t index);

  std::size_t nvars() const { return nvars_; }
  const std::map<Exponents, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t degree() const;

  MPoly derivative(std::size_t var) const;
  Scalar evaluate(const Vec& point) const;

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const Scalar& s);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const Scalar& s, MPoly a) { return a *= s; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend bool operator==(const MPoly& a, const MPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

private:
  void add_term(const Exponents& e, const Scalar& c);

  std::size_t nvars_ = 0;
  std::map<Exponents, Scalar> terms_;
};

}  // namespace nilcontact
