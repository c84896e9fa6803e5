#include "edval/zlattice.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "edval/combinatorics.hpp"
#include "edval/error.hpp"

namespace edval {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw ContractError("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

std::vector<IntVector> IntMatrix::row_list() const {
  std::vector<IntVector> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::is_skew_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      if ((*this)(i, j) != -(*this)(j, i)) return false;
  return true;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Int& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Int& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw ContractError("matrix product dimension mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Int& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

IntVector operator*(const IntMatrix& a, const IntVector& v) {
  if (a.cols() != v.size()) throw ContractError("matrix-vector dimension mismatch");
  IntVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * v[j];
  return out;
}

Int determinant(const IntMatrix& m) {
  if (!m.is_square()) throw ContractError("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && a(swap_with, k) == 0) ++swap_with;
      if (swap_with == n) return 0;
      a.swap_rows(k, swap_with);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

bool is_unimodular(const IntMatrix& m) { return m.is_square() && abs(determinant(m)) == 1; }

namespace {

// Row-style Hermite reduction of `m` in place, pivoting only on the first
// `pivot_cols` columns. Row operations apply to full rows. Returns the number
// of pivot rows.
std::size_t hermite_in_place(IntMatrix& m, std::size_t pivot_cols) {
  std::size_t row = 0;
  for (std::size_t col = 0; col < pivot_cols && row < m.rows(); ++col) {
    for (std::size_t i = row + 1; i < m.rows(); ++i) {
      if (m(i, col) == 0) continue;
      Int a = m(row, col), b = m(i, col), x, y;
      Int g = ext_gcd(a, b, x, y);
      Int a_g = a / g, b_g = b / g;
      for (std::size_t j = 0; j < m.cols(); ++j) {
        Int top = x * m(row, j) + y * m(i, j);
        Int bottom = a_g * m(i, j) - b_g * m(row, j);
        m(row, j) = std::move(top);
        m(i, j) = std::move(bottom);
      }
    }
    if (m(row, col) == 0) continue;
    if (m(row, col) < 0) m.negate_row(row);
    for (std::size_t i = 0; i < row; ++i) {
      Int q = floor_div(m(i, col), m(row, col));
      m.add_row_multiple(i, row, -q);
    }
    ++row;
  }
  return row;
}

}  // namespace

IntMatrix hermite_rows(const IntMatrix& m) {
  IntMatrix h = m;
  std::size_t rank = hermite_in_place(h, h.cols());
  IntMatrix out(rank, h.cols());
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < h.cols(); ++j) out(i, j) = h(i, j);
  return out;
}

IntMatrix inverse_unimodular(const IntMatrix& m) {
  if (!is_unimodular(m)) throw ContractError("matrix is not unimodular");
  const std::size_t n = m.rows();
  IntMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  hermite_in_place(aug, n);
  IntMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

SmithForm smith(const IntMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  SmithForm s{IntMatrix::identity(rows), m, IntMatrix::identity(cols)};
  IntMatrix& D = s.D;
  const std::size_t diag = std::min(rows, cols);

  for (std::size_t t = 0; t < diag; ++t) {
    bool any_nonzero = true;
    for (;;) {
      std::optional<std::pair<std::size_t, std::size_t>> pivot;
      Int best;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (D(i, j) == 0) continue;
          Int a = abs(D(i, j));
          if (!pivot || a < best) {
            best = std::move(a);
            pivot = {i, j};
          }
        }
      if (!pivot) {
        any_nonzero = false;
        break;
      }
      D.swap_rows(t, pivot->first);
      s.U.swap_rows(t, pivot->first);
      D.swap_cols(t, pivot->second);
      s.V.swap_cols(t, pivot->second);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (D(i, t) == 0) continue;
        Int q = D(i, t) / D(t, t);
        D.add_row_multiple(i, t, -q);
        s.U.add_row_multiple(i, t, -q);
        if (D(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (D(t, j) == 0) continue;
        Int q = D(t, j) / D(t, t);
        D.add_col_multiple(j, t, -q);
        s.V.add_col_multiple(j, t, -q);
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Pivot must divide the remaining block; otherwise fold an offending row in.
      std::optional<std::size_t> offender;
      for (std::size_t i = t + 1; i < rows && !offender; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (D(i, j) % D(t, t) != 0) {
            offender = i;
            break;
          }
      if (!offender) break;
      D.add_row_multiple(t, *offender, 1);
      s.U.add_row_multiple(t, *offender, 1);
    }
    if (!any_nonzero) break;
    if (D(t, t) < 0) {
      D.negate_row(t);
      s.U.negate_row(t);
    }
  }
  return s;
}

IntVector elementary_divisors(const IntMatrix& m) {
  SmithForm s = smith(m);
  IntVector out;
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) out.push_back(s.D(i, i));
  return out;
}

IntVector minors_gcd_divisors(const IntMatrix& m) {
  const std::size_t diag = std::min(m.rows(), m.cols());
  if (diag > 6) throw ContractError("minors_gcd_divisors limited to min(rows, cols) <= 6");
  IntVector out;
  Int prev = 1;
  for (std::size_t k = 1; k <= diag; ++k) {
    Int g = 0;
    for (const auto& rs : k_subsets(m.rows(), k))
      for (const auto& cs : k_subsets(m.cols(), k)) {
        IntMatrix minor(k, k);
        for (std::size_t a = 0; a < k; ++a)
          for (std::size_t b = 0; b < k; ++b) minor(a, b) = m(rs[a], cs[b]);
        g = gcd(g, determinant(minor));
      }
    if (g == 0) {
      out.resize(diag, Int(0));
      return out;
    }
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

Lattice::Lattice(std::size_t ambient_rank, const std::vector<IntVector>& basis)
    : ambient_rank_(ambient_rank) {
  for (const auto& v : basis)
    if (v.size() != ambient_rank) throw ContractError("lattice vector has wrong length");
  if (basis.empty()) return;
  IntMatrix h = hermite_rows(IntMatrix::from_rows(basis, ambient_rank));
  if (h.rows() != basis.size()) throw ContractError("lattice basis vectors are linearly dependent");
  basis_ = h.row_list();
}

Lattice Lattice::span(std::size_t ambient_rank, const std::vector<IntVector>& generators) {
  for (const auto& v : generators)
    if (v.size() != ambient_rank) throw ContractError("lattice vector has wrong length");
  Lattice out(ambient_rank);
  if (generators.empty()) return out;
  out.basis_ = hermite_rows(IntMatrix::from_rows(generators, ambient_rank)).row_list();
  return out;
}

Lattice Lattice::full(std::size_t ambient_rank) {
  return Lattice(ambient_rank, IntMatrix::identity(ambient_rank).row_list());
}

bool Lattice::contains(const IntVector& v) const {
  if (v.size() != ambient_rank_) throw ContractError("vector has wrong length");
  IntVector rest = v;
  std::size_t col = 0;
  for (const auto& b : basis_) {
    while (b[col] == 0) ++col;
    if (rest[col] % b[col] != 0) return false;
    Int q = rest[col] / b[col];
    for (std::size_t j = 0; j < ambient_rank_; ++j) rest[j] -= q * b[j];
  }
  return std::all_of(rest.begin(), rest.end(), [](const Int& x) { return x == 0; });
}

bool Lattice::is_saturated() const {
  for (const auto& d : elementary_divisors(basis_matrix()))
    if (d != 1) return false;
  return true;
}

Lattice saturate(const Lattice& lattice) {
  const std::size_t k = lattice.rank();
  if (k == 0) return lattice;
  SmithForm s = smith(lattice.basis_matrix());
  IntMatrix vinv = inverse_unimodular(s.V);
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < k; ++i) rows.push_back(vinv.row(i));
  return Lattice(lattice.ambient_rank(), rows);
}

IntMatrix basis_extend(const Lattice& lattice) {
  const std::size_t r = lattice.ambient_rank(), k = lattice.rank();
  if (k == 0) return IntMatrix::identity(r);
  if (!lattice.is_saturated()) throw ContractError("saturate first");
  SmithForm s = smith(lattice.basis_matrix());
  IntMatrix vinv = inverse_unimodular(s.V);
  IntMatrix out(r, r);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < r; ++j) out(i, j) = lattice.basis()[i][j];
  for (std::size_t i = k; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) out(i, j) = vinv(i, j);
  return out;
}

}  // namespace edval
