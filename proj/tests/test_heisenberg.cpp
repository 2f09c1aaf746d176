#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "preord/group.hpp"
#include "preord/heisenberg.hpp"
#include "support.hpp"

using namespace preord;
using namespace support;

namespace {

// Independent oracle: multiply the corresponding unitriangular matrices
//   [1 a c]
//   [0 1 b]
//   [0 0 1]
Heis matrix_mul(const Heis& x, const Heis& y) {
  Int m[3][3] = {{1, x.a, x.c}, {0, 1, x.b}, {0, 0, 1}};
  Int n[3][3] = {{1, y.a, y.c}, {0, 1, y.b}, {0, 0, 1}};
  Int r[3][3];
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      r[i][j] = 0;
      for (int k = 0; k < 3; ++k) r[i][j] += m[i][k] * n[k][j];
    }
  }
  return Heis{r[0][1], r[1][2], r[0][2]};
}

Heis rand_heis(Rng& rng, long bound = 8) {
  return Heis{Int(rng.range(-bound, bound)), Int(rng.range(-bound, bound)),
              Int(rng.range(-bound, bound))};
}

}  // namespace

TEST_CASE("multiplication examples") {
  CHECK(h_mul(Heis{1, 0, 0}, Heis{0, 1, 0}) == Heis{1, 1, 1});
  CHECK(h_mul(Heis{0, 1, 0}, Heis{1, 0, 0}) == Heis{1, 1, 0});  // noncommutative
  CHECK(h_mul(Heis{2, 3, 1}, h_id()) == Heis{2, 3, 1});
  CHECK(h_mul(h_id(), Heis{2, 3, 1}) == Heis{2, 3, 1});
}

TEST_CASE("multiplication matches the matrix picture") {
  Rng rng(41);
  for (int i = 0; i < 2000; ++i) {
    Heis x = rand_heis(rng), y = rand_heis(rng);
    CHECK(h_mul(x, y) == matrix_mul(x, y));
  }
}

TEST_CASE("inverses") {
  CHECK(h_inv(Heis{1, 2, 3}) == Heis{-1, -2, -1});
  Rng rng(42);
  for (int i = 0; i < 1000; ++i) {
    Heis x = rand_heis(rng);
    CHECK(h_mul(x, h_inv(x)) == h_id());
    CHECK(h_mul(h_inv(x), x) == h_id());
  }
}

TEST_CASE("associativity") {
  Rng rng(43);
  for (int i = 0; i < 1000; ++i) {
    Heis x = rand_heis(rng), y = rand_heis(rng), z = rand_heis(rng);
    CHECK(h_mul(h_mul(x, y), z) == h_mul(x, h_mul(y, z)));
  }
}

TEST_CASE("commutators land in the center") {
  CHECK(h_comm(Heis{1, 0, 0}, Heis{0, 1, 0}) == Heis{0, 0, 1});
  Rng rng(44);
  for (int i = 0; i < 500; ++i) {
    Heis x = rand_heis(rng), y = rand_heis(rng);
    Heis c = h_comm(x, y);
    CHECK(sgn(c.a) == 0);
    CHECK(sgn(c.b) == 0);
    CHECK(c.c == x.a * y.b - y.a * x.b);
    // central elements commute with everything
    Heis z{0, 0, Int(rng.range(-5, 5))};
    CHECK(h_mul(x, z) == h_mul(z, x));
  }
}

TEST_CASE("conjugation preserves tier") {
  Rng rng(45);
  for (int i = 0; i < 500; ++i) {
    Heis g = rand_heis(rng), x = rand_heis(rng);
    CHECK(h_tier(h_conj(g, x)) == h_tier(x));
  }
}

TEST_CASE("tier classification") {
  CHECK_FALSE(h_tier(h_id()).has_value());
  CHECK(h_tier(Heis{0, 0, 5}) == 1);
  CHECK(h_tier(Heis{0, 0, -1}) == 1);
  CHECK(h_tier(Heis{1, 0, 3}) == 0);
  CHECK(h_tier(Heis{0, -2, 0}) == 0);
}

TEST_CASE("group descriptor round-trips Heisenberg coordinates") {
  GroupDesc g = GroupDesc::heisenberg();
  CHECK(g.coords() == 3);
  CHECK_FALSE(g.abelian());
  CHECK(g.tier_dims() == std::vector<std::size_t>{2, 1});
  Rng rng(46);
  for (int i = 0; i < 500; ++i) {
    GVec x = rand_gvec(rng, g), y = rand_gvec(rng, g);
    Heis hx = to_heis(x), hy = to_heis(y);
    CHECK(g.mul(x, y) == from_heis(h_mul(hx, hy)));
    CHECK(g.inv(x) == from_heis(h_inv(hx)));
    CHECK(g.tier(x) == h_tier(hx));
    CHECK(from_heis(to_heis(x)) == x);
  }
  CHECK(g.id() == GVec(3, Int(0)));

  GroupDesc zn = GroupDesc::zn(4);
  CHECK(zn.coords() == 4);
  CHECK(zn.abelian());
  CHECK(zn.tier_dims() == std::vector<std::size_t>{4});
  GVec u = iv({1, 2, 3, 4}), v = iv({-1, 0, 2, 1});
  CHECK(zn.mul(u, v) == iv({0, 2, 5, 5}));
  CHECK(zn.inv(u) == iv({-1, -2, -3, -4}));
  CHECK(zn.tier(u) == 0);
  CHECK_FALSE(zn.tier(zn.id()).has_value());
}
