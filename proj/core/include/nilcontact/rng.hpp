#pragma once

#include <cstdint>
#include <random>

#include "nilcontact/scalar.hpp"

namespace nilcontact {

// Seeded generator whose output sequence is identical on every platform.
// std::mt19937_64 is fully specified by the standard; the distributions are not,
// so bounded draws are done here by rejection.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Derived stream for sub-task `index`; used for partitioned seeding.
  static Rng derived(std::uint64_t seed, std::uint64_t index) {
    // splitmix64 finaliser over the pair
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return Rng(z ^ (z >> 31));
  }

  std::uint64_t next() { return engine_(); }

  // Uniform on [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  // Uniform on [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  // Small rational with numerator in [-num_bound, num_bound] and denominator in
  // [1, den_bound].
  Scalar rational(std::int64_t num_bound = 9, std::int64_t den_bound = 4) {
    std::int64_t n = uniform(-num_bound, num_bound);
    std::int64_t d = uniform(1, den_bound);
    Scalar q(static_cast<long>(n), static_cast<unsigned long>(d));
    q.canonicalize();
    return q;
  }

  Scalar nonzero_rational(std::int64_t num_bound = 9, std::int64_t den_bound = 4) {
    Scalar q;
    do {
      q = rational(num_bound, den_bound);
    } while (q == 0);
    return q;
  }

  Vec vec(std::size_t n) {
    Vec v(n);
    for (auto& x : v) x = rational();
    return v;
  }

private:
  std::mt19937_64 engine_;
};

}  // namespace nilcontact
