#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "nilcontact/linalg.hpp"
#include "nilcontact/scalar.hpp"

namespace nilcontact {

// Sorted 0-based index triple i <= j <= k.
using Triple = std::array<std::size_t, 3>;

Triple canonical_triple(std::size_t i, std::size_t j, std::size_t k);

// Fully symmetric trilinear form T on Q^p. Only canonical triples are stored;
// T(e_i, e_j, e_k) for any ordering reads the same entry.
//
// The cubic is c(v) = sum over all (i, j, k) of T_ijk v_i v_j v_k, with no 1/6, so
// that B(v, v)(v) = c(v) holds exactly.
class SymCubic {
public:
  struct Monomial {
    std::size_t i, j, k;  // 0-based, any order
    Scalar coefficient;
  };

  SymCubic() = default;
  explicit SymCubic(std::size_t dim) : dim_(dim) {}
  // Zero entries are dropped; non-canonical keys are rejected.
  SymCubic(std::size_t dim, std::map<Triple, Scalar> entries);

  // The tensor whose cubic is sum of coefficient * x_i x_j x_k.
  static SymCubic from_polynomial(std::size_t dim, const std::vector<Monomial>& terms);

  std::size_t dim() const { return dim_; }
  const std::map<Triple, Scalar>& entries() const { return entries_; }
  // Every ordering of every stored entry, for loops that sum over all (i, j, k).
  const std::vector<std::pair<Triple, Scalar>>& expanded() const { return expanded_; }
  bool is_zero() const { return entries_.empty(); }

  // T(e_i, e_j, e_k), 0-based, any order.
  Scalar at(std::size_t i, std::size_t j, std::size_t k) const;

  // Scaled so the lexicographically first nonzero entry equals 1. Zero stays zero.
  SymCubic normalized() const;
  SymCubic scaled(const Scalar& s) const;

  // T'(u, v, w) = T(M u, M v, M w).
  SymCubic transformed(const Matrix& m) const;

  friend bool operator==(const SymCubic& a, const SymCubic& b) {
    return a.dim_ == b.dim_ && a.entries_ == b.entries_;
  }

private:
  std::size_t dim_ = 0;
  std::map<Triple, Scalar> entries_;
  std::vector<std::pair<Triple, Scalar>> expanded_;
};

// Distinct orderings of a canonical triple (1, 3 or 6 of them).
std::vector<Triple> orderings(const Triple& t);

Scalar cubic_eval(const SymCubic& t, const Vec& v);

// B(v1, v2) = T(v1, v2, .) as a covector; k-th coordinate sum_{i,j} T_ijk (v1)_i (v2)_j.
Covec polarize(const SymCubic& t, const Vec& v1, const Vec& v2);

// Rank over Q of span{ B(e_i, e_j) : i <= j }. The surjectivity assumption is
// b_rank(T) == T.dim().
std::size_t b_rank(const SymCubic& t);

// Entrywise reduction modulo a prime.
class FFTensor {
public:
  struct Entry {
    std::size_t i, j, k;  // one ordering
    std::uint64_t value;
  };

  FFTensor(std::uint64_t modulus, std::size_t dim, std::map<Triple, std::uint64_t> entries);

  std::uint64_t modulus() const { return modulus_; }
  std::size_t dim() const { return dim_; }
  const std::map<Triple, std::uint64_t>& entries() const { return entries_; }

  // B(v, v) over F_q written into `out` (size dim). Allocation-free hot path.
  void polarize_diagonal(const std::vector<std::uint64_t>& v, std::vector<std::uint64_t>& out) const;

private:
  std::uint64_t modulus_;
  std::size_t dim_;
  std::map<Triple, std::uint64_t> entries_;
  std::vector<Entry> expanded_;
  bool lazy_reduction_ = false;
};

class ReductionError : public std::invalid_argument {
public:
  ReductionError(const std::string& what, Triple entry) : std::invalid_argument(what), entry_(entry) {}
  Triple entry() const { return entry_; }

private:
  Triple entry_;
};

bool is_prime(std::uint64_t n);

// Throws ReductionError naming the first entry whose denominator q divides.
FFTensor reduce_mod(const SymCubic& t, std::uint64_t q);

// JSON tensor interchange: {"dim": p, "entries": [{"i":1,"j":1,"k":1,"value":"3/2"}, ...]}
// with 1-based i <= j <= k.
nlohmann::json to_json(const SymCubic& t);
// Throws InputError on any schema violation.
SymCubic cubic_from_json(const nlohmann::json& j);
SymCubic parse_cubic(std::string_view text);
std::string dump_cubic(const SymCubic& t);

// 64-bit FNV-1a of the canonical JSON dump, as 16 hex digits.
std::string cubic_hash(const SymCubic& t);

}  // namespace nilcontact
