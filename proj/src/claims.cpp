#include "edval/claims.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "edval/combinatorics.hpp"
#include "edval/error.hpp"
#include "edval/extalg.hpp"

namespace edval {

SubsetWitness claim_subset(std::size_t n, std::size_t d, std::size_t j) {
  if (d < 3 || n < d + 2) throw ContractError("claim_subset needs d >= 3 and n >= d + 2");
  if (j >= n) throw ContractError("residue j must lie in [0, n)");
  for (const auto& subset : k_subsets(n, d)) {
    if (!std::binary_search(subset.begin(), subset.end(), j)) continue;
    std::size_t sum = std::accumulate(subset.begin(), subset.end(), std::size_t{0});
    if (sum % n == 0) return SubsetWitness{n, d, j, subset};
  }
  throw InternalError("CLAIM FALSIFIED: no " + std::to_string(d) + "-subset of Z/" +
                      std::to_string(n) + " containing " + std::to_string(j) + " sums to 0");
}

bool is_valid_witness(const SubsetWitness& w) {
  if (w.set.size() != w.d) return false;
  for (std::size_t i = 0; i < w.set.size(); ++i) {
    if (w.set[i] >= w.n) return false;
    if (i > 0 && w.set[i] <= w.set[i - 1]) return false;
  }
  if (std::find(w.set.begin(), w.set.end(), w.j) == w.set.end()) return false;
  return std::accumulate(w.set.begin(), w.set.end(), std::size_t{0}) % w.n == 0;
}

bool verify_prime_index_iso(const std::vector<Int>& d_values, const IntMatrix& t, std::uint64_t p,
                            unsigned n) {
  const std::size_t r = d_values.size();
  if (!is_prime(p)) throw ContractError("non-prime modulus " + std::to_string(p));
  for (const auto& d : d_values)
    if (d <= 0 || d % p == 0)
      throw ContractError("index factor " + to_string(d) + " is not a positive integer prime to p");
  if (t.rows() != r || !is_unimodular(t)) throw ContractError("T must be a unimodular r x r matrix");

  const Int modulus = ipow(Int(p), n);
  for (std::size_t k = 0; k <= r; ++k) {
    const std::vector<IndexTuple> tuples = k_subsets(r, k);
    const std::size_t dim = tuples.size();
    // Row I: coordinates of (d_I t_I) in the standard basis of wedge^k Z^r.
    IntMatrix image(2 * dim, dim);
    for (std::size_t a = 0; a < dim; ++a) {
      Int scale = 1;
      for (std::size_t i : tuples[a]) scale *= d_values[i];
      for (std::size_t b = 0; b < dim; ++b) {
        IntMatrix minor(k, k);
        for (std::size_t x = 0; x < k; ++x)
          for (std::size_t y = 0; y < k; ++y) minor(x, y) = t(tuples[a][x], tuples[b][y]);
        image(a, b) = scale * minor_determinant(minor);
      }
      image(dim + a, a) = modulus;
    }
    for (const auto& div : elementary_divisors(image))
      if (div != 1) return false;
  }
  return true;
}

}  // namespace edval
