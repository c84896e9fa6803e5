#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "edval/extalg.hpp"
#include "edval/symcalc.hpp"
#include "edval/zlattice.hpp"

namespace edval {

/// Seeded generator with a portable bounded draw (std distributions differ
/// between standard libraries; sweep output must not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Independent stream for case `index` of a sweep seeded with `seed`.
  static Rng for_case(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next() { return engine_(); }
  /// Uniform in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  bool coin() { return (next() & 1U) != 0; }
  template <typename T>
  const T& pick(const std::vector<T>& items) {
    return items[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(items.size()) - 1))];
  }

 private:
  std::mt19937_64 engine_;
};

IntVector random_vector(Rng& rng, std::size_t rank, std::int64_t bound);
IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, std::int64_t bound);
/// Product of random elementary row operations, swaps and sign flips.
IntMatrix random_unimodular(Rng& rng, std::size_t n, std::size_t steps = 0);

struct RandomClassShape {
  std::size_t degree = 2;
  std::size_t max_rank = 6;
  std::size_t max_terms = 4;
  std::int64_t entry_bound = 9;
  std::vector<std::uint64_t> primes{2, 3, 5};
  unsigned max_level = 3;
};

/// Homogeneous class with a single level, rank in [1, max_rank].
SymbolClass random_class(Rng& rng, const RandomClassShape& shape);

}  // namespace edval
