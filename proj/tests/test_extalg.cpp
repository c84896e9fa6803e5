#include <doctest.h>

#include "edval/error.hpp"
#include "edval/extalg.hpp"
#include "edval/random.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace edval;
using testing_util::ints;
using testing_util::mat;
using testing_util::mv;

namespace {

Multivector random_mv(Rng& rng, std::uint64_t p, std::size_t rank, std::size_t max_degree) {
  Multivector m(p, rank);
  for (std::int64_t t = rng.uniform(0, 6); t > 0; --t) {
    auto d = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(max_degree)));
    IndexTuple idx;
    for (std::size_t k = 0; k < d; ++k) idx.push_back(static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(rank) - 1)));
    m.add_term(idx, pc_normalize(p, rng.uniform(1, 50), static_cast<unsigned>(rng.uniform(1, 3))));
  }
  return m;
}

}  // namespace

TEST_CASE("add_term sorts indices with sign and drops repeats") {
  Multivector m(3, 3);
  m.add_term({1, 0}, PCoeff::parse(3, "1/3"));
  CHECK(m.coeff({0, 1}).str() == "2/3");
  m.add_term({0, 0}, PCoeff::parse(3, "1/3"));
  CHECK(m.terms().size() == 1);
  m.add_term({0, 1}, PCoeff::parse(3, "1/3"));
  CHECK(m.is_zero());
  CHECK_THROWS_AS(m.add_term({3}, PCoeff::parse(3, "1/3")), ContractError);
}

TEST_CASE("wedge of vectors") {
  const PCoeff half = PCoeff::parse(2, "1/2");
  CHECK(mv_wedge_vectors(2, half, {ints({1, 0}), ints({0, 1})}, 2) == mv(2, 2, {{{0, 1}, "1/2"}}));
  CHECK(mv_wedge_vectors(2, PCoeff::parse(2, "1/4"), {ints({1, 0}), ints({2, 0})}, 2).is_zero());
  CHECK(mv_wedge_vectors(2, half, {ints({1, 1, 0}), ints({0, 1, 1})}, 3) ==
        mv(2, 3, {{{0, 1}, "1/2"}, {{0, 2}, "1/2"}, {{1, 2}, "1/2"}}));
  CHECK_THROWS_AS(mv_wedge_vectors(2, half, {ints({1, 0, 0})}, 2), ContractError);
}

TEST_CASE("wedge coefficients are Leibniz minors") {
  Rng rng(21);
  for (int iter = 0; iter < 60; ++iter) {
    auto rank = static_cast<std::size_t>(rng.uniform(1, 6));
    auto k = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(rank)));
    std::vector<IntVector> vs;
    for (std::size_t i = 0; i < k; ++i) vs.push_back(random_vector(rng, rank, 4));
    const PCoeff c = PCoeff::parse(5, "1/125");
    Multivector w = mv_wedge_vectors(5, c, vs, rank, Exec::Serial);
    for (const auto& cols : k_subsets(rank, k)) {
      std::vector<IntVector> sub(k, IntVector(k));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub[i][j] = vs[i][cols[j]];
      CHECK(w.coeff(cols) == pc_scale(oracle::leibniz_det(sub), c));
    }
  }
}

TEST_CASE("wedge antisymmetry") {
  Rng rng(22);
  for (int iter = 0; iter < 40; ++iter) {
    IntVector a = random_vector(rng, 4, 5), b = random_vector(rng, 4, 5), c = random_vector(rng, 4, 5);
    const PCoeff q = PCoeff::parse(3, "1/9");
    CHECK(mv_wedge_vectors(3, q, {a, a, c}, 4).is_zero());
    CHECK(mv_wedge_vectors(3, q, {b, a, c}, 4) == -mv_wedge_vectors(3, q, {a, b, c}, 4));
  }
}

TEST_CASE("mv_add") {
  Multivector x = mv(2, 3, {{{0, 1}, "1/4"}});
  CHECK(mv_add(x, Multivector(2, 3)) == x);
  CHECK(mv_add(mv(2, 2, {{{0, 1}, "1/2"}}), mv(2, 2, {{{0, 1}, "1/2"}})).is_zero());
  CHECK(mv_add(x, mv(2, 3, {{{1, 2}, "1/2"}})).terms().size() == 2);
  CHECK_THROWS_AS(mv_add(x, Multivector(3, 3)), ContractError);
  CHECK_THROWS_AS(mv_add(x, Multivector(2, 4)), ContractError);
}

TEST_CASE("contract_dual examples") {
  Multivector m = mv(2, 2, {{{0, 1}, "1/2"}});
  CHECK(contract_dual(m, {0}) == mv(2, 2, {{{1}, "1/2"}}));
  CHECK(contract_dual(m, {1}) == mv(2, 2, {{{0}, "1/2"}}));
  CHECK(contract_dual(m, {}) == m);
  Multivector q = mv(3, 3, {{{0, 1}, "1/3"}});
  CHECK(contract_dual(q, {1}) == mv(3, 3, {{{0}, "2/3"}}));
  CHECK(contract_dual(q, {0, 1}) == mv(3, 3, {{{}, "2/3"}}));
  CHECK_THROWS_AS(contract_dual(m, {2}), ContractError);
  CHECK_THROWS_AS(contract_dual(m, {1, 0}), ContractError);
}

TEST_CASE("contract_dual matches closed-form signs") {
  Rng rng(23);
  for (int iter = 0; iter < 60; ++iter) {
    const std::size_t rank = 5, degree = 3;
    oracle::DenseForm dense{7, 2, rank, {}};
    Multivector m(7, rank);
    for (const auto& idx : k_subsets(rank, degree)) {
      if (!rng.coin()) continue;
      Int num = rng.uniform(0, 48);
      dense.numerators[idx] = num;
      m.add_term(idx, pc_normalize(7, num, 2));
    }
    auto vecs = oracle::contraction_vectors(dense, degree);
    auto duals = k_subsets(rank, degree - 1);
    REQUIRE(vecs.size() == duals.size());
    for (std::size_t k = 0; k < duals.size(); ++k) {
      Multivector got = degree_part(contract_dual(m, duals[k]), 1);
      for (std::size_t i = 0; i < rank; ++i) CHECK(got.coeff({i}) == pc_normalize(7, vecs[k][i], 2));
    }
  }
}

TEST_CASE("contraction laws, randomized") {
  Rng rng(24);
  for (int iter = 0; iter < 100; ++iter) {
    const std::uint64_t p = rng.pick(std::vector<std::uint64_t>{2, 3, 5});
    const auto rank = static_cast<std::size_t>(rng.uniform(2, 5));
    Multivector m = random_mv(rng, p, rank, 4);
    Multivector n = random_mv(rng, p, rank, 4);
    IntVector v = random_vector(rng, rank, 5), w = random_vector(rng, rank, 5);

    CHECK(contract_vector(contract_vector(m, v), v).is_zero());
    auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(rank) - 1));
    CHECK(contract_single(contract_single(m, j), j).is_zero());

    IntVector vw(rank);
    for (std::size_t i = 0; i < rank; ++i) vw[i] = v[i] + w[i];
    CHECK(contract_vector(m, vw) == contract_vector(m, v) + contract_vector(m, w));
    CHECK(contract_vector(m + n, v) == contract_vector(m, v) + contract_vector(n, v));

    Multivector by_basis(p, rank);
    for (std::size_t i = 0; i < rank; ++i) by_basis += v[i] * contract_single(m, i);
    CHECK(contract_vector(m, v) == by_basis);

    const auto k = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(rank)));
    auto subsets = k_subsets(rank, k);
    IndexTuple dual = rng.pick(subsets);
    IndexTuple tail(dual.begin() + 1, dual.end());
    CHECK(contract_dual(m, dual) == contract_dual(contract_dual(m, tail), {dual[0]}));
  }
}

TEST_CASE("contract_vector on degree 2 is minus the skew matrix product") {
  CHECK(contract_vector(mv(2, 2, {{{0, 1}, "1/2"}}), ints({0, 1})) == mv(2, 2, {{{0}, "1/2"}}));
  CHECK(contract_vector(mv(2, 2, {{{}, "1/2"}}), ints({1, 1})).is_zero());
  CHECK_THROWS_AS(contract_vector(mv(2, 2, {}), ints({1})), ContractError);

  Rng rng(25);
  for (int iter = 0; iter < 60; ++iter) {
    const std::size_t r = 4;
    IntMatrix s(r, r);
    Multivector m(3, r);
    for (const auto& ij : k_subsets(r, 2)) {
      Int a = rng.uniform(-8, 8);
      s(ij[0], ij[1]) = a;
      s(ij[1], ij[0]) = -a;
      m.add_term(ij, pc_normalize(3, a, 2));
    }
    IntVector v = random_vector(rng, r, 6);
    IntVector sv = s * v;
    Multivector expect(3, r);
    for (std::size_t i = 0; i < r; ++i) expect.add_term({i}, pc_normalize(3, -sv[i], 2));
    CHECK(contract_vector(m, v) == expect);
  }
}

TEST_CASE("change of basis") {
  Multivector m = mv(2, 2, {{{0, 1}, "1/2"}});
  CHECK(change_basis(m, IntMatrix::identity(2)) == m);
  CHECK(change_basis(m, mat({{0, 1}, {1, 0}})) == m);
  Multivector q = mv(3, 2, {{{0, 1}, "1/3"}});
  CHECK(change_basis(q, mat({{0, 1}, {1, 0}})) == mv(3, 2, {{{0, 1}, "2/3"}}));
  CHECK_THROWS_AS(change_basis(m, mat({{2, 0}, {0, 1}})), ContractError);

  Rng rng(26);
  for (int iter = 0; iter < 60; ++iter) {
    const auto rank = static_cast<std::size_t>(rng.uniform(1, 5));
    Multivector x = random_mv(rng, 5, rank, 3);
    IntMatrix t = random_unimodular(rng, rank);
    CHECK(change_basis(change_basis(x, t), inverse_unimodular(t)) == x);
    CHECK(apply_linear(change_basis(x, t), t) == x);
  }
}

TEST_CASE("wedge commutes with linear maps") {
  Rng rng(27);
  for (int iter = 0; iter < 40; ++iter) {
    const std::size_t rank = 4;
    std::vector<IntVector> vs{random_vector(rng, rank, 4), random_vector(rng, rank, 4)};
    IntMatrix a = random_matrix(rng, rank, rank, 3);
    std::vector<IntVector> mapped;
    IntMatrix at = a.transpose();
    for (const auto& v : vs) mapped.push_back(at * v);
    const PCoeff c = PCoeff::parse(2, "1/8");
    CHECK(apply_linear(mv_wedge_vectors(2, c, vs, rank), a) == mv_wedge_vectors(2, c, mapped, rank));
  }
}

TEST_CASE("degree_part") {
  Multivector m = mv(2, 3, {{{}, "1/2"}, {{0}, "1/4"}, {{1, 2}, "1/2"}});
  CHECK(degree_part(m, 1) == mv(2, 3, {{{0}, "1/4"}}));
  CHECK(degree_part(m, 0) == mv(2, 3, {{{}, "1/2"}}));
  CHECK(degree_part(mv(2, 3, {{{0, 1}, "1/2"}}), 3).is_zero());
  CHECK(m.degrees() == std::set<std::size_t>{0, 1, 2});
  CHECK_FALSE(m.is_homogeneous());
}
