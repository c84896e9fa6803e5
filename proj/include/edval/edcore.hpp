#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "edval/exec.hpp"
#include "edval/extalg.hpp"
#include "edval/symcalc.hpp"
#include "edval/zlattice.hpp"

namespace edval {

/// Finite abelian p-group inside (Q_p/Z_p)^r, isomorphic to the direct sum of
/// Z/k_i over the invariant factors k_1 | k_2 | ... (all > 1). generators[i]
/// has order invariant_factors[i] and the generators are independent.
struct FiniteAbelianP {
  std::uint64_t p = 2;
  std::vector<Int> invariant_factors;
  std::vector<Multivector> generators;

  std::size_t min_generators() const { return invariant_factors.size(); }
};

enum class Classification { Zero, Symbol, NonSymbol, Mixed };
std::string to_string(Classification c);

struct BrauerData {
  IntMatrix matrix;
  unsigned level = 1;      // n, with the class living at p^n
  IntVector divisors;      // elementary divisors of the matrix
  std::size_t i0 = 0;      // number of divisors not divisible by p^n
  std::vector<Int> factors;  // nontrivial p^n / gcd(p^n, d_i), ascending
};

struct EdReport {
  std::uint64_t p = 2;
  std::size_t rank = 0;
  std::optional<std::size_t> degree;  // nullopt for mixed-degree classes
  std::size_t rho = 0;
  std::size_t ed_lower_bound = 0;
  bool exact = false;
  Classification classification = Classification::Zero;
  FiniteAbelianP a_omega;
  Lattice witness{0};
  std::optional<BrauerData> brauer;
};

/// Degree-1 parts of iota_{e^J}(m) for every increasing J of size deg - 1,
/// over every degree present in m. Zero vectors are dropped. The parallel
/// and serial paths return the same list in the same order.
std::vector<Multivector> contraction_generators(const Multivector& m, Exec exec = Exec::Parallel);

/// Subgroup of (Q_p/Z_p)^r generated by degree-1 multivectors, reduced to
/// invariant factors with independent generators.
FiniteAbelianP group_from_generators(std::uint64_t p, std::size_t rank,
                                     const std::vector<Multivector>& gens);

FiniteAbelianP a_omega(const Multivector& m, Exec exec = Exec::Parallel);
std::size_t rho(const Multivector& m, Exec exec = Exec::Parallel);

/// Saturated W of rank rho(m) with m in the image of (wedge W)/p^inf.
Lattice witness(const Multivector& m, Exec exec = Exec::Parallel);
Lattice witness_from_group(const FiniteAbelianP& group, std::size_t rank);

/// Whether m lies in the image of (wedge W)/p^inf -> (wedge Z^r)/p^inf.
bool membership(const Multivector& m, const Lattice& w);

/// Zero / Symbol / NonSymbol for homogeneous m. Throws InternalError if
/// rho = d + 1 (or 0 < rho < d), which the theory rules out.
Classification classify(const Multivector& m, Exec exec = Exec::Parallel);

/// sum_i weight_i (a_i b_i^T - b_i a_i^T) over valuation vectors.
/// Requires degree 2 and a single level.
IntMatrix brauer_matrix(const SymbolClass& c);
/// Same matrix after lifting every term to the largest level N (each term
/// scaled by p^(N - n)); returns the matrix and N.
std::pair<IntMatrix, unsigned> brauer_matrix_common_level(const SymbolClass& c);

BrauerData brauer_i0(const IntMatrix& m, std::uint64_t p, unsigned n);

EdReport ed_report(const SymbolClass& c, bool henselian = false, Exec exec = Exec::Parallel);

/// Overlattice (1/p^N) * span(numerators) of Z^r.
struct Overlattice {
  Lattice numerators;
  unsigned denominator_exp = 0;
};

struct SplitBoundOutcome {
  Int index;                 // [Gamma' : Gamma]
  bool hypothesis = false;   // image of m in Gamma' coordinates is zero
  std::size_t rho = 0;
  bool holds = true;         // hypothesis implies rho <= 2n
};

/// Checks the split-degree bound for a degree-2 m. Throws ContractError if
/// Gamma' does not contain Z^r with index dividing p^n.
SplitBoundOutcome split_bound_outcome(const Multivector& m, const Overlattice& gamma_prime,
                                      std::uint64_t p, unsigned n);
bool split_bound_check(const Multivector& m, const Overlattice& gamma_prime, std::uint64_t p,
                       unsigned n);

}  // namespace edval
