#include <doctest.h>

#include "edval/claims.hpp"
#include "edval/error.hpp"
#include "edval/random.hpp"

using namespace edval;

TEST_CASE("claim_subset examples") {
  SubsetWitness a = claim_subset(7, 3, 0);
  CHECK(a.set == std::vector<std::size_t>{0, 1, 6});
  CHECK(is_valid_witness(a));
  SubsetWitness b = claim_subset(8, 4, 4);
  CHECK(b.set == std::vector<std::size_t>{0, 1, 3, 4});
  CHECK(is_valid_witness(b));
  SubsetWitness c = claim_subset(5, 3, 2);
  CHECK(c.set == std::vector<std::size_t>{0, 2, 3});
  CHECK(is_valid_witness(c));
}

TEST_CASE("claim_subset preconditions") {
  CHECK_THROWS_AS(claim_subset(4, 3, 0), ContractError);
  CHECK_THROWS_AS(claim_subset(9, 2, 0), ContractError);
  CHECK_THROWS_AS(claim_subset(7, 3, 7), ContractError);
}

TEST_CASE("witness validator rejects bad sets") {
  CHECK_FALSE(is_valid_witness({7, 3, 0, {0, 1, 5}}));
  CHECK_FALSE(is_valid_witness({7, 3, 2, {0, 1, 6}}));
  CHECK_FALSE(is_valid_witness({7, 3, 0, {0, 6, 1}}));
  CHECK_FALSE(is_valid_witness({7, 3, 0, {0, 1}}));
}

TEST_CASE("claim holds on the full range") {
  for (std::size_t d = 3; d <= 6; ++d)
    for (std::size_t n = d + 2; n <= 12; ++n)
      for (std::size_t j = 0; j < n; ++j) CHECK(is_valid_witness(claim_subset(n, d, j)));
}

TEST_CASE("prime index isomorphism") {
  CHECK(verify_prime_index_iso({1, 1, 1}, IntMatrix::identity(3), 2, 1));
  Rng rng(51);
  CHECK(verify_prime_index_iso({3, 5}, random_unimodular(rng, 2), 2, 2));
  CHECK_THROWS_AS(verify_prime_index_iso({2, 1}, IntMatrix::identity(2), 2, 1), ContractError);
  CHECK_THROWS_AS(verify_prime_index_iso({1, 1}, IntMatrix::identity(3), 2, 1), ContractError);
  IntMatrix not_unimodular = IntMatrix::identity(2);
  not_unimodular(0, 0) = 3;
  CHECK_THROWS_AS(verify_prime_index_iso({1, 1}, not_unimodular, 2, 1), ContractError);
  for (int iter = 0; iter < 40; ++iter) {
    const std::uint64_t p = rng.coin() ? 2 : 3;
    const auto r = static_cast<std::size_t>(rng.uniform(1, 4));
    std::vector<Int> ds;
    while (ds.size() < r) {
      Int d = rng.uniform(1, 30);
      if (d % p != 0) ds.push_back(d);
    }
    CHECK(verify_prime_index_iso(ds, random_unimodular(rng, r), p, static_cast<unsigned>(rng.uniform(1, 2))));
  }
}
