#include "edval/extalg.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "edval/error.hpp"

namespace edval {

Multivector::Multivector(std::uint64_t p, std::size_t rank) : p_(p), rank_(rank) {
  if (!is_prime(p)) throw ContractError("non-prime modulus " + std::to_string(p));
}

PCoeff Multivector::coeff(const IndexTuple& tuple) const {
  auto it = terms_.find(tuple);
  return it == terms_.end() ? PCoeff(p_) : it->second;
}

void Multivector::add_term(IndexTuple indices, const PCoeff& c) {
  if (c.p() != p_) throw ContractError("coefficient prime does not match multivector");
  if (c.is_zero()) return;
  bool odd = false;
  // Insertion sort keeps track of the permutation parity.
  for (std::size_t i = 1; i < indices.size(); ++i) {
    for (std::size_t j = i; j > 0 && indices[j - 1] > indices[j]; --j) {
      std::swap(indices[j - 1], indices[j]);
      odd = !odd;
    }
  }
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] >= rank_) throw ContractError("index out of range");
    if (i > 0 && indices[i] == indices[i - 1]) return;
  }
  auto it = terms_.try_emplace(std::move(indices), PCoeff(p_)).first;
  it->second += odd ? -c : c;
  if (it->second.is_zero()) terms_.erase(it);
}

std::set<std::size_t> Multivector::degrees() const {
  std::set<std::size_t> out;
  for (const auto& [tuple, c] : terms_) out.insert(tuple.size());
  return out;
}

void Multivector::require_compatible(const Multivector& other) const {
  if (other.p_ != p_ || other.rank_ != rank_)
    throw ContractError("multivectors differ in prime or rank");
}

Multivector& Multivector::operator+=(const Multivector& other) {
  require_compatible(other);
  for (const auto& [tuple, c] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(tuple, c);
    if (inserted) continue;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
  return *this;
}

Multivector Multivector::operator-() const {
  Multivector out = *this;
  for (auto& [tuple, c] : out.terms_) c = -c;
  return out;
}

Multivector operator*(const Int& m, const Multivector& a) {
  Multivector out(a.p_, a.rank_);
  for (const auto& [tuple, c] : a.terms_) {
    PCoeff s = m * c;
    if (!s.is_zero()) out.terms_.emplace(tuple, std::move(s));
  }
  return out;
}

namespace {

Int cofactor_det(const IntMatrix& m, std::vector<std::size_t>& cols, std::size_t row) {
  const std::size_t n = m.rows();
  if (row == n) return 1;
  Int total = 0;
  int sign = 1;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    std::size_t c = cols[k];
    if (m(row, c) != 0) {
      cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(k));
      Int sub = cofactor_det(m, cols, row + 1);
      cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(k), c);
      if (sign > 0)
        total += m(row, c) * sub;
      else
        total -= m(row, c) * sub;
    }
    sign = -sign;
  }
  return total;
}

}  // namespace

Int minor_determinant(const IntMatrix& m) {
  if (!m.is_square()) throw ContractError("determinant of non-square matrix");
  if (m.rows() > 4) return determinant(m);
  std::vector<std::size_t> cols(m.cols());
  for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
  return cofactor_det(m, cols, 0);
}

Multivector mv_wedge_vectors(std::uint64_t p, const PCoeff& c, const std::vector<IntVector>& vectors,
                             std::size_t rank, Exec exec) {
  if (c.p() != p) throw ContractError("coefficient prime does not match");
  for (const auto& v : vectors)
    if (v.size() != rank) throw ContractError("wedge vector has wrong length");
  Multivector out(p, rank);
  const std::size_t d = vectors.size();
  if (c.is_zero() || d > rank) return out;
  for (const auto& v : vectors)
    if (std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; })) return out;

  const std::vector<IndexTuple> columns = k_subsets(rank, d);
  std::vector<Int> minors(columns.size());
  const auto count = static_cast<std::ptrdiff_t>(columns.size());
  [[maybe_unused]] const bool parallel = exec == Exec::Parallel && columns.size() >= kParallelThreshold;
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::ptrdiff_t idx = 0; idx < count; ++idx) {
    const IndexTuple& cols = columns[static_cast<std::size_t>(idx)];
    IntMatrix sub(d, d);
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) sub(a, b) = vectors[a][cols[b]];
    minors[static_cast<std::size_t>(idx)] = minor_determinant(sub);
  }
  for (std::size_t idx = 0; idx < columns.size(); ++idx)
    if (minors[idx] != 0) out.add_term(columns[idx], minors[idx] * c);
  return out;
}

Multivector mv_add(const Multivector& a, const Multivector& b) { return a + b; }

Multivector contract_single(const Multivector& m, std::size_t j) {
  if (j >= m.rank()) throw ContractError("contraction index out of range");
  Multivector out(m.p(), m.rank());
  for (const auto& [tuple, c] : m.terms()) {
    auto it = std::find(tuple.begin(), tuple.end(), j);
    if (it == tuple.end()) continue;
    auto pos = static_cast<std::size_t>(it - tuple.begin());
    IndexTuple rest;
    rest.reserve(tuple.size() - 1);
    rest.insert(rest.end(), tuple.begin(), it);
    rest.insert(rest.end(), it + 1, tuple.end());
    out.add_term(std::move(rest), pos % 2 == 0 ? c : -c);
  }
  return out;
}

Multivector contract_dual(const Multivector& m, const IndexTuple& dual) {
  for (std::size_t i = 0; i < dual.size(); ++i) {
    if (dual[i] >= m.rank()) throw ContractError("contraction index out of range");
    if (i > 0 && dual[i] <= dual[i - 1])
      throw ContractError("dual index list must be strictly increasing");
  }
  Multivector out = m;
  for (auto it = dual.rbegin(); it != dual.rend(); ++it) out = contract_single(out, *it);
  return out;
}

Multivector contract_vector(const Multivector& m, const IntVector& v) {
  if (v.size() != m.rank()) throw ContractError("contraction vector has wrong length");
  Multivector out(m.p(), m.rank());
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (v[j] == 0) continue;
    out += v[j] * contract_single(m, j);
  }
  return out;
}

Multivector apply_linear(const Multivector& m, const IntMatrix& a, Exec exec) {
  if (a.rows() != m.rank()) throw ContractError("linear map has wrong number of rows");
  Multivector out(m.p(), a.cols());
  for (const auto& [tuple, c] : m.terms()) {
    std::vector<IntVector> images;
    images.reserve(tuple.size());
    for (std::size_t i : tuple) images.push_back(a.row(i));
    out += mv_wedge_vectors(m.p(), c, images, a.cols(), exec);
  }
  return out;
}

Multivector change_basis(const Multivector& m, const IntMatrix& t) {
  if (t.rows() != m.rank() || !t.is_square()) throw ContractError("basis matrix has wrong shape");
  return apply_linear(m, inverse_unimodular(t));
}

Multivector degree_part(const Multivector& m, std::size_t d) {
  Multivector out(m.p(), m.rank());
  for (const auto& [tuple, c] : m.terms())
    if (tuple.size() == d) out.add_term(tuple, c);
  return out;
}

}  // namespace edval
