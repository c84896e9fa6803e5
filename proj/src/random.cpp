#include "edval/random.hpp"

namespace edval {

Rng Rng::for_case(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer decorrelates neighbouring case indices
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30U)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27U)) * 0x94D049BB133111EBULL;
  return Rng(z ^ (z >> 31U));
}

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(next() % span);
}

IntVector random_vector(Rng& rng, std::size_t rank, std::int64_t bound) {
  IntVector v(rank);
  for (auto& x : v) x = rng.uniform(-bound, bound);
  return v;
}

IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, std::int64_t bound) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.uniform(-bound, bound);
  return m;
}

IntMatrix random_unimodular(Rng& rng, std::size_t n, std::size_t steps) {
  IntMatrix t = IntMatrix::identity(n);
  if (n == 0) return t;
  if (steps == 0) steps = 3 * n;
  const auto last = static_cast<std::int64_t>(n) - 1;
  for (std::size_t s = 0; s < steps; ++s) {
    auto a = static_cast<std::size_t>(rng.uniform(0, last));
    auto b = static_cast<std::size_t>(rng.uniform(0, last));
    switch (rng.uniform(0, 3)) {
      case 0: t.swap_rows(a, b); break;
      case 1: t.negate_row(a); break;
      default:
        if (a != b) t.add_row_multiple(a, b, Int(rng.uniform(-3, 3)));
        break;
    }
  }
  return t;
}

SymbolClass random_class(Rng& rng, const RandomClassShape& shape) {
  const std::uint64_t p = rng.pick(shape.primes);
  const auto rank = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(shape.max_rank)));
  const auto n = static_cast<unsigned>(rng.uniform(1, shape.max_level));
  const auto terms = rng.uniform(1, static_cast<std::int64_t>(shape.max_terms));
  SymbolClass c(p, rank);
  for (std::int64_t i = 0; i < terms; ++i) {
    SymbolTerm t;
    t.n = n;
    for (std::size_t s = 0; s < shape.degree; ++s)
      t.slots.push_back(Slot{random_vector(rng, rank, shape.entry_bound), Int(1)});
    c.add_term(std::move(t));
  }
  return c;
}

}  // namespace edval
