#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace gorbit;
using gorbit::testing::iv;
using gorbit::testing::raw_weight_index;

TEST_CASE("weights in 1/8(1,2,5)") {
  const auto g = GroupData::cyclic(8, {1, 2, 5});
  CHECK(g.order() == 8);
  CHECK(g.in_sl());
  CHECK(g.weight(iv({1, 0, 0})) == Character({1}));
  CHECK(g.weight(iv({0, 1, 0})) == Character({2}));
  CHECK(g.weight(iv({0, 0, 1})) == Character({5}));
  CHECK(g.weight(iv({1, 1, 1})) == Character({0}));
  CHECK(g.weight(iv({-1, 0, 0})) == Character({7}));
  CHECK(g.multiply(Character({3}), Character({5})) == g.trivial_character());
  CHECK(g.inverse(Character({3})) == Character({5}));
  CHECK(g.power(Character({3}), 3) == Character({1}));
  CHECK(g.name(Character({6})) == "chi_6");
  CHECK(g.parse_character("6") == Character({6}));
  CHECK(g.parse_character("chi_6") == Character({6}));
  CHECK(g.parse_character("χ6") == Character({6}));
  CHECK(g.parse_character("9") == Character({1}));
  CHECK_THROWS_AS(g.parse_character("1,2"), InvalidInput);
  CHECK_THROWS_AS(g.parse_character("1/2"), InvalidInput);
}

TEST_CASE("non-SL and non-faithful groups") {
  CHECK_FALSE(GroupData::cyclic(4, {1, 2}).in_sl());
  CHECK_THROWS_AS(GroupData::cyclic(4, {2, 2}), InvalidInput);
  CHECK_THROWS_AS(GroupData::cyclic(0, {1}), InvalidInput);
  CHECK(GroupData::trivial(3).order() == 1);
}

TEST_CASE("Z/2 x Z/2") {
  const GroupData g({2, 2}, {{1, 1, 0}, {0, 1, 1}});
  CHECK(g.order() == 4);
  CHECK_FALSE(g.is_cyclic());
  CHECK(g.in_sl());
  CHECK(g.weight(iv({0, 1, 0})) == Character({1, 1}));
  CHECK(g.name(Character({1, 0})) == "chi(1,0)");
  CHECK(g.parse_character("1,0") == Character({1, 0}));
  CHECK(g.parse_character("chi(0,1)") == Character({0, 1}));
  CHECK(g.elements().size() == 4);
}

TEST_CASE("property: representatives have the right weight and minimal degree") {
  for (const auto& g : {GroupData::cyclic(8, {1, 2, 5}), GroupData::cyclic(7, {1, 2, 4}), GroupData::cyclic(5, {1, 3}),
                        GroupData({2, 2}, {{1, 1, 0}, {0, 1, 1}}), GroupData({3, 3}, {{1, 2, 0}, {0, 1, 2}})}) {
    // Minimal total degree by exhaustive search of the box [0, |G|]^n.
    std::vector<long> best(g.order(), -1);
    gorbit::testing::for_each_box_point(g.dimension(), static_cast<long>(g.order()), [&](const std::vector<long>& m) {
      long deg = 0;
      for (auto v : m) deg += v;
      auto& slot = best[raw_weight_index(g, m)];
      if (slot < 0 || deg < slot) slot = deg;
    });
    for (std::size_t k = 0; k < g.order(); ++k) {
      const auto& rep = g.representative(k);
      Integer deg = 0;
      for (const auto& v : rep) {
        CHECK(v >= 0);
        deg += v;
      }
      CHECK(g.weight(rep) == g.character(k));
      CHECK(deg == best[k]);
      CHECK(g.index(g.character(k)) == k);
      for (std::size_t j = 0; j < g.dimension(); ++j)
        CHECK(g.character(g.step(k, j)) == g.multiply(g.character(k), g.generator_weight(j)));
    }
  }
}
