#include <doctest.h>

#include "edval/error.hpp"
#include "edval/pcoeff.hpp"
#include "edval/random.hpp"

using namespace edval;

TEST_CASE("normalize reduces into canonical range") {
  CHECK(pc_normalize(2, 2, 2).str() == "1/2");
  CHECK(pc_normalize(3, 9, 2).is_zero());
  CHECK(pc_normalize(3, 9, 2).exp() == 0);
  CHECK(pc_normalize(2, -1, 3).str() == "7/8");
  CHECK_THROWS_WITH_AS(pc_normalize(4, 1, 1), "non-prime modulus 4", ContractError);
}

TEST_CASE("addition") {
  auto half = PCoeff::parse(2, "1/2");
  CHECK((half + half).is_zero());
  CHECK(pc_add(PCoeff::parse(2, "1/4"), half).str() == "3/4");
  CHECK(pc_add(PCoeff::parse(2, "3/8"), PCoeff::parse(2, "7/8")).str() == "1/4");
  CHECK_THROWS_AS(pc_add(PCoeff::parse(2, "1/2"), PCoeff::parse(3, "1/3")), ContractError);
}

TEST_CASE("scaling and order") {
  CHECK(pc_scale(3, PCoeff::parse(2, "1/4")).str() == "3/4");
  CHECK(pc_scale(4, PCoeff::parse(2, "1/4")).is_zero());
  CHECK(pc_scale(2, PCoeff::parse(2, "3/8")).str() == "3/4");
  CHECK(pc_order(PCoeff::parse(2, "3/8")) == 8);
  CHECK(pc_order(PCoeff(5)) == 1);
  CHECK(pc_order(PCoeff::parse(3, "1/3")) == 3);
}

TEST_CASE("text round trip and rejects") {
  for (const char* s : {"0", "1/2", "3/8", "5/16"}) CHECK(PCoeff::parse(2, s).str() == s);
  CHECK(PCoeff::parse(2, "6/8").str() == "3/4");
  CHECK_THROWS_AS(PCoeff::parse(2, "1/6"), ParseError);
  CHECK_THROWS_AS(PCoeff::parse(2, "x/2"), ParseError);
}

TEST_CASE("group law and annihilation, randomized") {
  Rng rng(7);
  for (int iter = 0; iter < 300; ++iter) {
    std::uint64_t p = rng.pick(std::vector<std::uint64_t>{2, 3, 5, 7});
    auto draw = [&] {
      return pc_normalize(p, rng.uniform(-1000, 1000), static_cast<unsigned>(rng.uniform(0, 4)));
    };
    PCoeff a = draw(), b = draw(), c = draw();
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK((a + -a).is_zero());
    CHECK(a + PCoeff(p) == a);
    CHECK(pc_normalize(p, a.num(), a.exp()) == a);
    CHECK(pc_scale(a.denominator(), a).is_zero());
    if (!a.is_zero()) CHECK_FALSE(pc_scale(ipow(Int(p), a.exp() - 1), a).is_zero());
    CHECK(PCoeff::parse(p, a.str()) == a);
  }
}
