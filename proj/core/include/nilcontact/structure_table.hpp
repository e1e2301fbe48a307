#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "nilcontact/rng.hpp"

namespace nilcontact {

// Sparse vector over a coefficient ring: (basis index, coefficient), sorted by index,
// no zero coefficients.
template <class C>
using SparseVec = std::vector<std::pair<std::size_t, C>>;

template <class C>
void sparse_axpy(SparseVec<C>& acc, const C& a, const SparseVec<C>& x) {
  if (a == 0 || x.empty()) return;
  SparseVec<C> out;
  out.reserve(acc.size() + x.size());
  std::size_t i = 0, j = 0;
  while (i < acc.size() || j < x.size()) {
    if (j == x.size() || (i < acc.size() && acc[i].first < x[j].first)) {
      out.push_back(std::move(acc[i++]));
    } else if (i == acc.size() || x[j].first < acc[i].first) {
      out.emplace_back(x[j].first, a * x[j].second);
      ++j;
    } else {
      C v = acc[i].second + a * x[j].second;
      if (v != 0) out.emplace_back(acc[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  acc = std::move(out);
}

// Structure constants [b_i, b_j] = sum_k c_ij^k b_k of a finite-dimensional algebra.
template <class C>
class StructureTable {
public:
  StructureTable() = default;
  explicit StructureTable(std::size_t dim) : dim_(dim), table_(dim * dim) {}

  std::size_t dim() const { return dim_; }
  const SparseVec<C>& operator()(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
  void set(std::size_t i, std::size_t j, SparseVec<C> v) { table_[i * dim_ + j] = std::move(v); }

  SparseVec<C> bracket(const SparseVec<C>& x, const SparseVec<C>& y) const {
    SparseVec<C> out;
    for (const auto& [i, a] : x) {
      for (const auto& [j, b] : y) sparse_axpy(out, C(a * b), (*this)(i, j));
    }
    return out;
  }

  // Cyclic Jacobi sum on basis elements; empty means the identity holds for the triple.
  SparseVec<C> jacobi(std::size_t i, std::size_t j, std::size_t k) const {
    SparseVec<C> out;
    auto add_term = [&](std::size_t a, std::size_t b, std::size_t c) {
      for (const auto& [m, coef] : (*this)(b, c)) sparse_axpy(out, coef, (*this)(a, m));
    };
    add_term(i, j, k);
    add_term(j, k, i);
    add_term(k, i, j);
    return out;
  }

  struct JacobiResult {
    std::uint64_t triples_checked = 0;
    std::vector<std::array<std::size_t, 3>> violations;
  };

  // Every ordered basis triple.
  JacobiResult jacobi_full(std::size_t max_violations = 16) const {
    JacobiResult r;
    for (std::size_t i = 0; i < dim_; ++i) {
      for (std::size_t j = 0; j < dim_; ++j) {
        for (std::size_t k = 0; k < dim_; ++k) {
          ++r.triples_checked;
          if (!jacobi(i, j, k).empty() && r.violations.size() < max_violations) {
            r.violations.push_back({i, j, k});
          }
        }
      }
    }
    return r;
  }

  JacobiResult jacobi_sampled(std::uint64_t samples, std::uint64_t seed, std::size_t max_violations = 16) const {
    JacobiResult r;
    Rng rng(seed);
    for (std::uint64_t s = 0; s < samples; ++s) {
      std::size_t i = rng.below(dim_), j = rng.below(dim_), k = rng.below(dim_);
      ++r.triples_checked;
      if (!jacobi(i, j, k).empty() && r.violations.size() < max_violations) {
        r.violations.push_back({i, j, k});
      }
    }
    return r;
  }

private:
  std::size_t dim_ = 0;
  std::vector<SparseVec<C>> table_;
};

}  // namespace nilcontact
