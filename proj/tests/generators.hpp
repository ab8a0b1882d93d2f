#pragma once

// Small seeded generators for property tests. Only raw engine output is
// used so every platform sees the same cases.

#include <cstdint>
#include <random>
#include <vector>

#include "knarayana/exact.hpp"
#include "knarayana/polynomial.hpp"

namespace knarayana::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) {
    return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  Rational rational(long num_bound = 9, long den_bound = 6) {
    return make_rational(Integer(integer(-num_bound, num_bound)), Integer(integer(1, den_bound)));
  }

  Rational nonzero_rational(long num_bound = 9, long den_bound = 6) {
    for (;;) {
      Rational q = rational(num_bound, den_bound);
      if (q != 0) return q;
    }
  }

  Polynomial polynomial(int max_degree) {
    std::vector<Rational> c;
    const int d = static_cast<int>(integer(0, max_degree));
    for (int i = 0; i <= d; ++i) c.push_back(rational());
    return Polynomial(std::move(c));
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace knarayana::testing
