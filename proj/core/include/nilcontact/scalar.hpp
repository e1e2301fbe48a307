#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace nilcontact {

// Exact rational. GMP keeps mpq_class canonical (lowest terms, positive denominator)
// after every arithmetic operation.
using Scalar = mpq_class;

// Element of V = Q^p.
using Vec = std::vector<Scalar>;

// n / d in lowest terms. The two-argument mpq_class constructor does not reduce.
inline Scalar frac(long n, long d) {
  Scalar q(n, d);
  q.canonicalize();
  return q;
}

// Parses "num/den", "num" or "-num/den". Throws InputError on anything else or a zero
// denominator.
Scalar parse_scalar(std::string_view text);

// Canonical text: "3/2", "-4", "0".
std::string format_scalar(const Scalar& s);

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
bool is_zero(const Vec& v);

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator-(const Vec& a);
Vec operator*(const Scalar& s, const Vec& a);
Vec& operator+=(Vec& a, const Vec& b);
Vec& operator-=(Vec& a, const Vec& b);

// Element of V*. Kept as its own type so vectors and covectors are never mixed silently.
struct Covec {
  Vec coords;

  Covec() = default;
  explicit Covec(std::size_t n) : coords(n, Scalar(0)) {}
  explicit Covec(Vec c) : coords(std::move(c)) {}

  std::size_t dim() const { return coords.size(); }
  const Scalar& operator[](std::size_t i) const { return coords[i]; }
  Scalar& operator[](std::size_t i) { return coords[i]; }

  // Dual pairing with a vector.
  Scalar operator()(const Vec& v) const;

  bool is_zero() const { return nilcontact::is_zero(coords); }

  Covec& operator+=(const Covec& o);
  Covec& operator-=(const Covec& o);
  Covec& operator*=(const Scalar& s);
  friend Covec operator+(Covec a, const Covec& b) { return a += b; }
  friend Covec operator-(Covec a, const Covec& b) { return a -= b; }
  friend Covec operator-(Covec a) { return a *= Scalar(-1); }
  friend Covec operator*(const Scalar& s, Covec a) { return a *= s; }
  friend bool operator==(const Covec& a, const Covec& b) { return a.coords == b.coords; }
};

Scalar dot(const Vec& a, const Vec& b);

}  // namespace nilcontact
