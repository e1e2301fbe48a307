#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "nilcontact/catalog.hpp"
#include "nilcontact/errors.hpp"

namespace testing_support {

using namespace nilcontact;

inline NElem random_nelem(std::size_t p, Rng& rng) { return n_from_coordinates(p, rng.vec(n_dim(p))); }

inline Vec ints(std::initializer_list<long> xs) {
  Vec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

// Leibniz expansion; deliberately naive, used as an oracle for the elimination code.
inline Scalar leibniz_det(const Matrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Scalar total = 0;
  do {
    int inv = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inv += perm[i] > perm[j];
    Scalar term = inv % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n && term != 0; ++i) term *= m(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// The catalog cubics with p in {1, 3, 6, 9, 15, 27}.
inline std::vector<std::string> jordan_names() { return {"x3", "xyz", "det-sym-3", "det3", "pfaff6", "j3o-norm"}; }

}  // namespace testing_support
