#pragma once

// Test-only oracles. None of these call into the SNF, HNF, contraction or
// wedge code they are used to check.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "edval/bigint.hpp"
#include "edval/combinatorics.hpp"

namespace oracle {

using edval::Int;
using edval::IntVector;
using edval::IndexTuple;

/// Parity of the permutation sorting `seq` (distinct entries), by inversion count.
inline int sort_sign(const std::vector<std::size_t>& seq) {
  int inversions = 0;
  for (std::size_t a = 0; a < seq.size(); ++a)
    for (std::size_t b = a + 1; b < seq.size(); ++b)
      if (seq[a] > seq[b]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

/// Leibniz determinant: sum over all permutations.
inline Int leibniz_det(const std::vector<IntVector>& rows) {
  const std::size_t n = rows.size();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  Int total = 0;
  do {
    Int term = sort_sign(perm);
    for (std::size_t i = 0; i < n && term != 0; ++i) term *= rows[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Homogeneous degree-d element over a common denominator p^N:
/// tuple -> numerator (mod p^N).
struct DenseForm {
  std::uint64_t p = 2;
  unsigned N = 1;
  std::size_t rank = 0;
  std::map<IndexTuple, Int> numerators;
};

/// Degree-1 parts of iota_{e^J}(omega) for every (d-1)-subset J, using the
/// closed form: the e_i coefficient of iota_{e^{j_1}..e^{j_k}}(e_I), with
/// I = J + {i}, is the sign of the permutation sorting (j_k, ..., j_1, i).
inline std::vector<IntVector> contraction_vectors(const DenseForm& w, std::size_t degree) {
  std::vector<IntVector> out;
  const Int mod = edval::ipow(Int(w.p), w.N);
  for (const auto& dual : edval::k_subsets(w.rank, degree - 1)) {
    IntVector v(w.rank);
    for (std::size_t i = 0; i < w.rank; ++i) {
      if (std::find(dual.begin(), dual.end(), i) != dual.end()) continue;
      IndexTuple full = dual;
      full.push_back(i);
      std::vector<std::size_t> seq(dual.rbegin(), dual.rend());
      seq.push_back(i);
      std::sort(full.begin(), full.end());
      auto it = w.numerators.find(full);
      if (it == w.numerators.end()) continue;
      v[i] = edval::floor_mod(sort_sign(seq) * it->second, mod);
    }
    out.push_back(std::move(v));
  }
  return out;
}

/// Invariant factors (ascending, all > 1) of the subgroup of (Z/p^N)^r
/// generated by `gens`, by explicit closure and counting p^k-torsion.
inline std::vector<Int> brute_group_factors(const std::vector<IntVector>& gens, std::uint64_t p, unsigned N,
                                            std::size_t rank, std::size_t limit = 200000) {
  const Int mod = edval::ipow(Int(p), N);
  std::set<IntVector> group{IntVector(rank, Int(0))};
  std::vector<IntVector> frontier{IntVector(rank, Int(0))};
  while (!frontier.empty()) {
    std::vector<IntVector> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        IntVector y(rank);
        for (std::size_t i = 0; i < rank; ++i) y[i] = edval::floor_mod(x[i] + g[i], mod);
        if (group.insert(y).second) next.push_back(std::move(y));
      }
    frontier = std::move(next);
    if (group.size() > limit) throw std::runtime_error("brute-force group too large");
  }
  // |A[p^k]| = p^{sum_i min(k, e_i)}; exponents of the factors follow.
  std::vector<unsigned> torsion_log(N + 1, 0);
  for (unsigned k = 1; k <= N; ++k) {
    const Int pk = edval::ipow(Int(p), k);
    std::size_t count = 0;
    for (const auto& x : group) {
      bool killed = true;
      for (const auto& c : x) killed = killed && edval::floor_mod(pk * c, mod) == 0;
      if (killed) ++count;
    }
    unsigned lg = 0;
    while (count > 1) {
      count /= p;
      ++lg;
    }
    torsion_log[k] = lg;
  }
  // number of factors with exponent >= k is torsion_log[k] - torsion_log[k-1]
  std::vector<Int> factors;
  for (unsigned k = N; k >= 1; --k) {
    unsigned at_least_k = torsion_log[k] - torsion_log[k - 1];
    unsigned at_least_k1 = k < N ? torsion_log[k + 1] - torsion_log[k] : 0;
    for (unsigned c = 0; c < at_least_k - at_least_k1; ++c) factors.push_back(edval::ipow(Int(p), k));
  }
  std::sort(factors.begin(), factors.end());
  return factors;
}

}  // namespace oracle
