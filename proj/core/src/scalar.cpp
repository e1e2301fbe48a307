#include "nilcontact/scalar.hpp"

#include <cctype>

#include "nilcontact/errors.hpp"

namespace nilcontact {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
    throw InputError("malformed rational literal '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num[0] == '+' ? num.substr(1) : num));
  mpz_class d{std::string(den)};
  if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  Scalar q(n, d);
  q.canonicalize();
  return q;
}

std::string format_scalar(const Scalar& s) { return s.get_str(); }

Vec zero_vec(std::size_t n) { return Vec(n, Scalar(0)); }

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n, Scalar(0));
  v.at(i) = 1;
  return v;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

Vec operator+(const Vec& a, const Vec& b) {
  Vec r = a;
  return r += b;
}

Vec operator-(const Vec& a, const Vec& b) {
  Vec r = a;
  return r -= b;
}

Vec operator-(const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

Vec operator*(const Scalar& s, const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

Vec& operator+=(Vec& a, const Vec& b) {
  require_dim(b.size(), a.size(), "vector addition");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

Vec& operator-=(Vec& a, const Vec& b) {
  require_dim(b.size(), a.size(), "vector subtraction");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

Scalar dot(const Vec& a, const Vec& b) {
  require_dim(b.size(), a.size(), "dot");
  Scalar r = 0;
  for (std::size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
  return r;
}

Scalar Covec::operator()(const Vec& v) const { return dot(coords, v); }

Covec& Covec::operator+=(const Covec& o) {
  coords += o.coords;
  return *this;
}

Covec& Covec::operator-=(const Covec& o) {
  coords -= o.coords;
  return *this;
}

Covec& Covec::operator*=(const Scalar& s) {
  for (auto& x : coords) x *= s;
  return *this;
}

}  // namespace nilcontact
