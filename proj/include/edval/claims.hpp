#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "edval/zlattice.hpp"

namespace edval {

/// A set S of d distinct residues mod n containing j with sum(S) = 0 mod n.
struct SubsetWitness {
  std::size_t n = 0;
  std::size_t d = 0;
  std::size_t j = 0;
  std::vector<std::size_t> set;  // increasing
};

/// Lexicographically first witness for (n, d, j). Requires d >= 3 and
/// n >= d + 2. Throws InternalError ("CLAIM FALSIFIED") if none exists.
SubsetWitness claim_subset(std::size_t n, std::size_t d, std::size_t j);
bool is_valid_witness(const SubsetWitness& w);

/// With Gamma' = Z^r and Gamma spanned by the rows of diag(d) * T, checks
/// that (wedge Gamma)/p^n -> (wedge Gamma')/p^n is onto (hence bijective) in
/// every degree. Each d_i must be positive and prime to p; T unimodular.
bool verify_prime_index_iso(const std::vector<Int>& d_values, const IntMatrix& t, std::uint64_t p,
                            unsigned n);

}  // namespace edval
