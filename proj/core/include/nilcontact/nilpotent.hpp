#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "nilcontact/scalar.hpp"
#include "nilcontact/structure_table.hpp"
#include "nilcontact/sym_cubic.hpp"

namespace nilcontact {

// W is spanned by f_1, f_2 with omega(f_1, f_2) = 1. The base line is span(f_1) and
// the chart complement is span(f_2); index 0 is f_1 throughout.
inline constexpr std::size_t kEll = 0;
inline constexpr std::size_t kEm = 1;

// omega(f_a, f_b).
inline int omega(std::size_t a, std::size_t b) { return a == b ? 0 : (a == kEll ? 1 : -1); }

// Element of n = (V (x) W) + V* + W.
struct NElem {
  std::array<Vec, 2> n1;  // n1[a] is the V-coefficient of (x) f_a
  Covec n2;
  std::array<Scalar, 2> n3;  // coordinates on f_1, f_2

  static NElem zero(std::size_t p);
  std::size_t dim() const { return n2.dim(); }

  // Homogeneous component of degree 1, 2 or 3.
  NElem grade(int g) const;
  bool is_zero() const;

  NElem& operator+=(const NElem& o);
  NElem& operator-=(const NElem& o);
  NElem& operator*=(const Scalar& s);
  friend NElem operator+(NElem a, const NElem& b) { return a += b; }
  friend NElem operator-(NElem a, const NElem& b) { return a -= b; }
  friend NElem operator-(NElem a) { return a *= Scalar(-1); }
  friend NElem operator*(const Scalar& s, NElem a) { return a *= s; }
  friend bool operator==(const NElem& a, const NElem& b) {
    return a.n1 == b.n1 && a.n2 == b.n2 && a.n3 == b.n3;
  }
};

// Basis of n in the order e_i (x) f_1, e_i (x) f_2, eps_i, f_1, f_2; dim n = 3p + 2.
std::size_t n_dim(std::size_t p);
NElem n_basis(std::size_t p, std::size_t index);
Vec n_coordinates(const NElem& x);
NElem n_from_coordinates(std::size_t p, const Vec& coords);
// Degree (1, 2, 3) of a basis index.
int n_basis_degree(std::size_t p, std::size_t index);

// [v1 (x) w1, v2 (x) w2] = omega(w1, w2) B(v1, v2) and [v*, v (x) w] = v*(v) w, extended
// bilinearly and antisymmetrically; n3 is central.
NElem bracket(const NElem& x, const NElem& y, const SymCubic& t);

// Traceless endomorphism of W, matrix in the basis f_1, f_2 (a(r, c) maps f_c to f_r).
class SlWElem {
public:
  SlWElem() = default;
  // Throws InputError unless a11 + a22 == 0.
  SlWElem(Scalar a11, Scalar a12, Scalar a21, Scalar a22);

  const Scalar& operator()(std::size_t r, std::size_t c) const { return m_[r][c]; }
  std::array<Scalar, 2> apply(const std::array<Scalar, 2>& w) const;

  // Basis h = diag(1, -1), e = f_1 <- f_2, f = f_2 <- f_1.
  static SlWElem h();
  static SlWElem e();
  static SlWElem f();

  friend bool operator==(const SlWElem& a, const SlWElem& b) { return a.m_ == b.m_; }

private:
  std::array<std::array<Scalar, 2>, 2> m_{};
};

// Derivation action of sl(W): on the W factor of n1, trivially on n2, naturally on n3.
NElem act_slw(const SlWElem& g, const NElem& x);

// The graded algebra for a given cubic, with its structure constants cached. The
// construction succeeds whether or not the surjectivity assumption holds;
// assumption_ok() reports it.
class NilpotentAlgebra {
public:
  explicit NilpotentAlgebra(SymCubic t);

  const SymCubic& cubic() const { return cubic_; }
  std::size_t p() const { return cubic_.dim(); }
  std::size_t dim() const { return n_dim(p()); }
  std::size_t b_rank() const { return b_rank_; }
  bool assumption_ok() const { return b_rank_ == p(); }
  const std::string& hash() const { return hash_; }

  NElem bracket(const NElem& x, const NElem& y) const { return nilcontact::bracket(x, y, cubic_); }
  const StructureTable<Scalar>& structure() const { return table_; }

  // Throws AssumptionViolated when the assumption fails.
  void require_assumption(const char* who) const;

private:
  SymCubic cubic_;
  std::size_t b_rank_;
  std::string hash_;
  StructureTable<Scalar> table_;
};

struct JacobiReport {
  std::string cubic_hash;
  std::size_t p = 0;
  std::size_t dim_n = 0;
  std::uint64_t triples_checked = 0;
  std::vector<std::array<std::size_t, 3>> violations;  // basis indices
  bool assumption_ok = false;

  bool pass() const { return violations.empty(); }
};

// Exact cyclic sum over every ordered basis triple of n.
JacobiReport verify_jacobi(const SymCubic& t);
JacobiReport verify_jacobi(const NilpotentAlgebra& alg);
nlohmann::json to_json(const JacobiReport& r);

struct DimReport {
  std::size_t p = 0;
  std::size_t dim_n = 0;
  std::size_t dim_group_plus_one_minus_p = 0;  // dim N + 1 - p
  std::size_t two_p_plus_three = 0;
  bool consistent = false;
};

DimReport dim_report(const SymCubic& t);
nlohmann::json to_json(const DimReport& r);

}  // namespace nilcontact
