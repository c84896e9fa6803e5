#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "edval/combinatorics.hpp"
#include "edval/exec.hpp"
#include "edval/pcoeff.hpp"
#include "edval/zlattice.hpp"

namespace edval {

/// Sparse element of (exterior algebra of Z^r) (x) Q_p/Z_p. Keys are strictly
/// increasing index tuples; stored coefficients are nonzero and canonical.
class Multivector {
 public:
  using Terms = std::map<IndexTuple, PCoeff>;

  Multivector(std::uint64_t p, std::size_t rank);

  std::uint64_t p() const { return p_; }
  std::size_t rank() const { return rank_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient of e_I for increasing I (zero if absent).
  PCoeff coeff(const IndexTuple& tuple) const;

  /// Adds c * e_{i_1} ^ ... ^ e_{i_k} for indices in any order; the sign of
  /// the sorting permutation is applied and repeated indices give zero.
  void add_term(IndexTuple indices, const PCoeff& c);

  /// Degrees of the stored terms.
  std::set<std::size_t> degrees() const;
  bool is_homogeneous() const { return degrees().size() <= 1; }

  Multivector& operator+=(const Multivector& other);
  Multivector operator-() const;
  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator*(const Int& m, const Multivector& a);
  friend bool operator==(const Multivector& a, const Multivector& b) = default;

 private:
  void require_compatible(const Multivector& other) const;

  std::uint64_t p_;
  std::size_t rank_;
  Terms terms_;
};

/// Determinant of a small square matrix: cofactor expansion up to 4 x 4,
/// Bareiss elimination above.
Int minor_determinant(const IntMatrix& m);

/// c (x) v_1 ^ ... ^ v_d expanded in the standard basis.
Multivector mv_wedge_vectors(std::uint64_t p, const PCoeff& c, const std::vector<IntVector>& vectors,
                             std::size_t rank, Exec exec = Exec::Parallel);

Multivector mv_add(const Multivector& a, const Multivector& b);

/// iota_{e^j}: contraction against a single dual basis vector.
Multivector contract_single(const Multivector& m, std::size_t j);
/// iota_{e^{j_1} ^ ... ^ e^{j_k}} = iota_{e^{j_1}} o ... o iota_{e^{j_k}}.
Multivector contract_dual(const Multivector& m, const IndexTuple& dual);
/// iota_f for f = <v, .>.
Multivector contract_vector(const Multivector& m, const IntVector& v);

/// Linear map induced by e_i -> row i of A (A is rank x rank').
Multivector apply_linear(const Multivector& m, const IntMatrix& a, Exec exec = Exec::Parallel);
/// Coordinates of m with respect to the basis formed by the rows of the
/// unimodular matrix T.
Multivector change_basis(const Multivector& m, const IntMatrix& t);

Multivector degree_part(const Multivector& m, std::size_t d);

}  // namespace edval
