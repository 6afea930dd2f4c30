#include "doctest.h"
#include "fixtures.hpp"
#include "permstat/blocks.hpp"

using namespace permstat;
using fixtures::P;
using fixtures::W;

namespace {

std::string classes(const BlockDecomposition& d) {
  std::string out;
  for (const auto& b : d.blocks) out += static_cast<char>(b.kind);
  return out;
}

}  // namespace

TEST_CASE("decomposition of the worked example") {
  const auto d = decompose(P("10,2,6,11,1,8,13,3,5,9,4,12,7"));
  REQUIRE(d.blocks.size() == 6);
  CHECK(d.blocks[0].letters == W({10, 2, 6}));
  CHECK(d.blocks[1].letters == W({11, 1}));
  CHECK(d.blocks[2].letters == W({8}));
  CHECK(d.blocks[3].letters == W({13, 3}));
  CHECK(d.blocks[4].letters == W({5, 9, 4}));
  CHECK(d.blocks[5].letters == W({12, 7}));
  CHECK(classes(d) == "ATNTII");
  CHECK(d.count(BlockClass::T) == 2);
  CHECK(format_decomposition(d) ==
        "10 2 6 | 11 1 | 8 | 13 3 | 5 9 4 | 12 7\n"
        "A        T      N   T      I       I\n");
}

TEST_CASE("decomposition edge cases") {
  CHECK(classes(decompose(P("123"))) == "TTT");
  const auto d = decompose(P("321"));
  REQUIRE(d.blocks.size() == 1);
  CHECK(d.blocks[0].letters == W({3, 2, 1}));
  CHECK(classes(d) == "T");
  CHECK(classes(decompose(P("1"))) == "T");
}

TEST_CASE("rotations") {
  CHECK(rotate_min(W({10, 2, 6})) == W({6, 10, 2}));
  CHECK(rotate_max(W({5, 9, 4})) == W({9, 4, 5}));
  CHECK(rotate_min(W({1})) == W({1}));
  CHECK(rotate_max(W({1})) == W({1}));
  CHECK_THROWS_WITH_AS(rotate_min(std::vector<int>{}), "empty word", InputError);
  CHECK_THROWS_AS(rotate_max(std::vector<int>{}), InputError);
}

TEST_CASE("varphi") {
  CHECK(format_permutation(varphi(P("10,2,6,11,1,8,13,3,5,9,4,12,7")), ",") == "9,4,5,11,1,6,10,2,8,12,7,13,3");
  CHECK(varphi(Permutation::identity(7)) == Permutation::identity(7));
  for (int n = 1; n <= 7; ++n) {
    for_each_permutation(n, [](const Permutation& p) {
      const auto q = varphi(p);
      REQUIRE(varphi(q) == p);
      REQUIRE(rlmin(p.values()) == wnm(q));
      REQUIRE(wnm(p) == rlmin(q.values()));
      REQUIRE(rlm(p) == rlm(q));
      REQUIRE(des(p.values()) == des(q.values()));
      REQUIRE(u321(p) == u321(q));
    });
  }
}

TEST_CASE("chi on 321-avoiders") {
  CHECK(reverse_complement_core(P("123468759")) == P("123486579"));
  CHECK_THROWS_WITH_AS(chi321(P("123468759")), doctest::Contains("not 321-avoiding"), InputError);
  CHECK(chi321(Permutation::identity(5)) == Permutation::identity(5));
  CHECK(chi321(P("1")) == P("1"));
  for (const auto& p : all_permutations_avoiding_321(6)) {
    const auto q = chi321(p);
    REQUIRE(avoids_321(q));
    REQUIRE(chi321(q) == p);
    REQUIRE(rlm(p) == rlm(q));
    REQUIRE(rlmin(p.values()) == wnm(q));
    REQUIRE(wnm(p) == rlmin(q.values()));
    REQUIRE(des(p.values()) == des(q.values()));
    REQUIRE(ides(p) == ides(q));
  }
}

TEST_CASE("blocks concatenate back and carry one T block at least") {
  for_each_permutation(7, [](const Permutation& p) {
    const auto d = decompose(p);
    REQUIRE(d.concatenated() == p.word());
    REQUIRE(d.count(BlockClass::T) >= 1);
  });
}
