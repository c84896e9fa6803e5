#include <doctest.h>

#include "edval/error.hpp"
#include "edval/random.hpp"
#include "edval/zlattice.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace edval;

using testing_util::ints;
using testing_util::mat;

namespace {

void check_smith_contract(const IntMatrix& m) {
  SmithForm s = smith(m);
  REQUIRE(s.U * m * s.V == s.D);
  CHECK(abs(determinant(s.U)) == 1);
  CHECK(abs(determinant(s.V)) == 1);
  const std::size_t diag = std::min(m.rows(), m.cols());
  for (std::size_t i = 0; i < s.D.rows(); ++i)
    for (std::size_t j = 0; j < s.D.cols(); ++j)
      if (i != j) CHECK(s.D(i, j) == 0);
  for (std::size_t i = 0; i + 1 < diag; ++i) {
    CHECK(s.D(i, i) >= 0);
    if (s.D(i, i) == 0)
      CHECK(s.D(i + 1, i + 1) == 0);
    else
      CHECK(s.D(i + 1, i + 1) % s.D(i, i) == 0);
  }
}

}  // namespace

TEST_CASE("smith examples") {
  CHECK(elementary_divisors(IntMatrix::identity(3)) == ints({1, 1, 1}));
  CHECK(elementary_divisors(mat({{2, 4}, {6, 8}})) == ints({2, 4}));
  CHECK(elementary_divisors(IntMatrix(2, 2)) == ints({0, 0}));
  CHECK(elementary_divisors(mat({{0, 2}, {-2, 0}})) == ints({2, 2}));
  CHECK(elementary_divisors(IntMatrix(3, 3)) == ints({0, 0, 0}));
  check_smith_contract(mat({{2, 4}, {6, 8}}));
}

TEST_CASE("block skew matrix has unit divisors") {
  for (std::size_t r = 1; r <= 4; ++r) {
    IntMatrix m(2 * r, 2 * r);
    for (std::size_t b = 0; b < r; ++b) {
      m(2 * b, 2 * b + 1) = 1;
      m(2 * b + 1, 2 * b) = -1;
    }
    CHECK(elementary_divisors(m) == IntVector(2 * r, Int(1)));
    CHECK(determinant(m) == 1);
  }
}

TEST_CASE("minors gcd oracle") {
  CHECK(minors_gcd_divisors(mat({{2, 4}, {6, 8}})) == ints({2, 4}));
  CHECK(minors_gcd_divisors(IntMatrix::identity(4)) == ints({1, 1, 1, 1}));
  CHECK(minors_gcd_divisors(mat({{0, 3}, {-3, 0}})) == ints({3, 3}));
  CHECK_THROWS_AS(minors_gcd_divisors(IntMatrix(7, 7)), ContractError);
}

TEST_CASE("determinant matches Leibniz expansion") {
  Rng rng(11);
  for (int iter = 0; iter < 100; ++iter) {
    auto n = static_cast<std::size_t>(rng.uniform(0, 5));
    IntMatrix m = random_matrix(rng, n, n, 9);
    CHECK(determinant(m) == oracle::leibniz_det(m.row_list()));
  }
}

TEST_CASE("smith contract and oracle agreement on random and rectangular matrices") {
  Rng rng(12);
  for (int iter = 0; iter < 200; ++iter) {
    auto rows = static_cast<std::size_t>(rng.uniform(1, 5));
    auto cols = static_cast<std::size_t>(rng.uniform(1, 5));
    IntMatrix m = random_matrix(rng, rows, cols, 12);
    if (rng.coin()) m = random_matrix(rng, rows, 2, 3) * random_matrix(rng, 2, cols, 3);
    check_smith_contract(m);
    CHECK(elementary_divisors(m) == minors_gcd_divisors(m));
  }
}

TEST_CASE("elementary divisors are invariant under unimodular transforms") {
  Rng rng(13);
  for (int iter = 0; iter < 100; ++iter) {
    auto n = static_cast<std::size_t>(rng.uniform(1, 5));
    IntMatrix m = random_matrix(rng, n, n, 6);
    IntMatrix t = random_unimodular(rng, n);
    CHECK(elementary_divisors(t * m) == elementary_divisors(m));
    CHECK(elementary_divisors(m * t) == elementary_divisors(m));
  }
}

TEST_CASE("unimodular inverse") {
  Rng rng(14);
  for (int iter = 0; iter < 50; ++iter) {
    auto n = static_cast<std::size_t>(rng.uniform(1, 6));
    IntMatrix t = random_unimodular(rng, n, 20);
    CHECK(t * inverse_unimodular(t) == IntMatrix::identity(n));
  }
  CHECK_THROWS_AS(inverse_unimodular(mat({{2, 0}, {0, 1}})), ContractError);
}

TEST_CASE("hermite form is canonical") {
  IntMatrix h = hermite_rows(mat({{2, 4, 0}, {1, 2, 3}, {3, 6, 3}}));
  CHECK(h == mat({{1, 2, 3}, {0, 0, 6}}));
  Rng rng(15);
  for (int iter = 0; iter < 50; ++iter) {
    IntMatrix b = random_matrix(rng, 3, 4, 5);
    IntMatrix t = random_unimodular(rng, 3);
    CHECK(hermite_rows(t * b) == hermite_rows(b));
  }
}

TEST_CASE("saturation examples") {
  CHECK(saturate(Lattice(2, {ints({2, 0}), ints({0, 1})})) == Lattice::full(2));
  CHECK(saturate(Lattice(2, {ints({2, 4})})).basis() == std::vector<IntVector>{ints({1, 2})});
  Lattice sat(3, {ints({1, 1, 0}), ints({0, 1, 1})});
  CHECK(saturate(sat) == sat);
  CHECK(saturate(Lattice(4)).rank() == 0);
  CHECK_THROWS_AS(Lattice(2, {ints({1, 2}), ints({2, 4})}), ContractError);
}

TEST_CASE("saturation properties, randomized") {
  Rng rng(16);
  for (int iter = 0; iter < 100; ++iter) {
    auto r = static_cast<std::size_t>(rng.uniform(1, 5));
    std::vector<IntVector> gens;
    for (std::int64_t k = rng.uniform(1, static_cast<std::int64_t>(r)); k > 0; --k)
      gens.push_back(random_vector(rng, r, 6));
    Lattice l = Lattice::span(r, gens);
    Lattice s = saturate(l);
    CHECK(s.rank() == l.rank());
    CHECK(saturate(s) == s);
    CHECK(s.is_saturated());
    for (const auto& v : l.basis()) CHECK(s.contains(v));
    for (const auto& d : elementary_divisors(s.basis_matrix())) CHECK(d == 1);
  }
}

TEST_CASE("basis extension") {
  CHECK(basis_extend(Lattice(2, {ints({1, 0})})) == IntMatrix::identity(2));
  IntMatrix t = basis_extend(Lattice(2, {ints({1, 2})}));
  CHECK(abs(determinant(t)) == 1);
  CHECK(t.row(0) == ints({1, 2}));
  CHECK(is_unimodular(basis_extend(Lattice::full(3))));
  CHECK_THROWS_WITH_AS(basis_extend(Lattice(2, {ints({2, 0})})), "saturate first", ContractError);

  Rng rng(17);
  for (int iter = 0; iter < 60; ++iter) {
    auto r = static_cast<std::size_t>(rng.uniform(1, 6));
    std::vector<IntVector> gens;
    for (std::int64_t k = rng.uniform(0, static_cast<std::int64_t>(r)); k > 0; --k)
      gens.push_back(random_vector(rng, r, 5));
    Lattice s = saturate(Lattice::span(r, gens));
    IntMatrix ext = basis_extend(s);
    CHECK(is_unimodular(ext));
    for (std::size_t i = 0; i < s.rank(); ++i) CHECK(ext.row(i) == s.basis()[i]);
  }
}

TEST_CASE("lattice membership of vectors") {
  Lattice l(3, {ints({2, 0, 0}), ints({0, 3, 3})});
  CHECK(l.contains(ints({4, -3, -3})));
  CHECK_FALSE(l.contains(ints({1, 0, 0})));
  CHECK_FALSE(l.contains(ints({0, 3, 0})));
  CHECK(Lattice(3).contains(ints({0, 0, 0})));
}
