#pragma once

#include <cstddef>
#include <vector>

#include "edval/bigint.hpp"

namespace edval {

/// Dense row-major integer matrix with arbitrary-precision entries.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static IntMatrix identity(std::size_t n);
  /// Rows must all have the same length; `cols` is used when `rows` is empty.
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols = 0);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector row(std::size_t i) const;
  std::vector<IntVector> row_list() const;
  IntMatrix transpose() const;
  bool is_skew_symmetric() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Int& factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Int& factor);
  void negate_row(std::size_t i);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

IntVector operator*(const IntMatrix& a, const IntVector& v);

/// Exact determinant by fraction-free (Bareiss) elimination.
Int determinant(const IntMatrix& m);
bool is_unimodular(const IntMatrix& m);
/// Inverse of a unimodular matrix; throws ContractError otherwise.
IntMatrix inverse_unimodular(const IntMatrix& m);

struct SmithForm {
  IntMatrix U;  // rows x rows, unimodular
  IntMatrix D;  // rows x cols, diagonal d_1 | d_2 | ..., nonnegative, zeros last
  IntMatrix V;  // cols x cols, unimodular
};

/// U * M * V = D.
SmithForm smith(const IntMatrix& m);
/// The min(rows, cols) diagonal entries of smith(m).D.
IntVector elementary_divisors(const IntMatrix& m);
/// d_i = g_i / g_{i-1} where g_i is the gcd of all i x i minors. Limited to
/// min(rows, cols) <= 6.
IntVector minors_gcd_divisors(const IntMatrix& m);

/// Row Hermite normal form: echelon, positive pivots, entries above each
/// pivot reduced into [0, pivot). Zero rows are dropped.
IntMatrix hermite_rows(const IntMatrix& m);

/// A subgroup of Z^r given by a basis of linearly independent row vectors,
/// always stored in row Hermite normal form.
class Lattice {
 public:
  explicit Lattice(std::size_t ambient_rank) : ambient_rank_(ambient_rank) {}
  /// Throws ContractError if the vectors are dependent or have the wrong length.
  Lattice(std::size_t ambient_rank, const std::vector<IntVector>& basis);
  /// The subgroup generated by arbitrary (possibly dependent) vectors.
  static Lattice span(std::size_t ambient_rank, const std::vector<IntVector>& generators);
  static Lattice full(std::size_t ambient_rank);

  std::size_t ambient_rank() const { return ambient_rank_; }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<IntVector>& basis() const { return basis_; }
  IntMatrix basis_matrix() const { return IntMatrix::from_rows(basis_, ambient_rank_); }

  bool contains(const IntVector& v) const;
  bool is_saturated() const;

  friend bool operator==(const Lattice& a, const Lattice& b) = default;

 private:
  std::size_t ambient_rank_ = 0;
  std::vector<IntVector> basis_;
};

/// (L (x) Q) intersected with Z^r.
Lattice saturate(const Lattice& lattice);
/// Unimodular r x r matrix whose first rank(L) rows are the basis of L.
/// Throws ContractError("saturate first") if L is not saturated.
IntMatrix basis_extend(const Lattice& lattice);

}  // namespace edval
