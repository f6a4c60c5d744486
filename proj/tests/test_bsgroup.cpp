#include "bsplus/bsgroup.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using namespace bsplus;

namespace {

BSElement el(unsigned long m, long x) { return {m, Integer(x)}; }

}  // namespace

TEST_CASE("context rejects n < 2") {
  CHECK_THROWS_AS(BSContext(1), std::invalid_argument);
  CHECK_THROWS_AS(BSContext(0), std::invalid_argument);
  BSContext ctx(3);
  CHECK(ctx.n() == 3);
  CHECK(ctx.power(4) == 81);
}

TEST_CASE("mul examples") {
  BSContext two(2);
  CHECK(mul(two, el(1, 0), el(0, 1)) == el(1, 1));
  CHECK(mul(two, el(0, 1), el(1, 0)) == el(1, 2));  // ab = ba^2

  BSContext three(3);
  CHECK(mul(three, el(1, 2), el(2, 1)) == el(3, 19));

  for (unsigned long n : {2ul, 3ul, 7ul}) {
    BSContext ctx(n);
    BSElement g = el(4, -13);
    CHECK(mul(ctx, g, identity()) == g);
    CHECK(mul(ctx, identity(), g) == g);
  }
}

TEST_CASE("exponents grow without overflow") {
  BSContext ctx(5);
  BSElement g = el(0, 1);
  BSElement h = el(100, 0);
  BSElement gh = mul(ctx, g, h);
  CHECK(gh.m == 100);
  CHECK(gh.x == ctx.power(100));
}

TEST_CASE("commutes examples") {
  BSContext two(2);
  CHECK_FALSE(commutes(two, el(0, 1), el(1, 0)));
  CHECK(commutes(two, el(1, 1), el(2, 3)));
  for (unsigned long n : {2ul, 3ul, 5ul}) {
    CHECK(commutes(BSContext(n), el(0, 3), el(0, -5)));
  }
}

TEST_CASE("mul is associative on random triples") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<unsigned long> n_dist(2, 6);
  std::uniform_int_distribution<unsigned long> m_dist(0, 6);
  std::uniform_int_distribution<long> x_dist(-50, 50);
  for (int i = 0; i < 2000; ++i) {
    BSContext ctx(n_dist(rng));
    BSElement g = el(m_dist(rng), x_dist(rng));
    BSElement h = el(m_dist(rng), x_dist(rng));
    BSElement f = el(m_dist(rng), x_dist(rng));
    CHECK(mul(ctx, mul(ctx, g, h), f) == mul(ctx, g, mul(ctx, h, f)));
  }
}

TEST_CASE("algebraic commutation criterion matches product comparison exhaustively") {
  for (unsigned long n = 2; n <= 4; ++n) {
    BSContext ctx(n);
    for (unsigned long mg = 0; mg <= 3; ++mg) {
      for (long xg = -6; xg <= 6; ++xg) {
        for (unsigned long mh = 0; mh <= 3; ++mh) {
          for (long xh = -6; xh <= 6; ++xh) {
            BSElement g = el(mg, xg);
            BSElement h = el(mh, xh);
            bool c = commutes(ctx, g, h);
            REQUIRE(c == commutes_by_products(ctx, g, h));
            REQUIRE(c == commutes(ctx, h, g));
          }
        }
      }
    }
  }
}
