#pragma once

#include <string>
#include <utility>
#include <vector>

#include "edval/extalg.hpp"

namespace testing_util {

using edval::Int;
using edval::IntVector;

/// Builds a multivector from (indices, "num/den") pairs.
inline edval::Multivector mv(std::uint64_t p, std::size_t rank,
                             const std::vector<std::pair<edval::IndexTuple, std::string>>& terms) {
  edval::Multivector m(p, rank);
  for (const auto& [idx, c] : terms) m.add_term(idx, edval::PCoeff::parse(p, c));
  return m;
}

inline IntVector ints(std::initializer_list<long long> xs) {
  IntVector v;
  for (long long x : xs) v.emplace_back(x);
  return v;
}

inline edval::IntMatrix mat(const std::vector<IntVector>& rows) { return edval::IntMatrix::from_rows(rows); }

inline std::vector<Int> factors(std::initializer_list<long long> xs) { return ints(xs); }

}  // namespace testing_util
