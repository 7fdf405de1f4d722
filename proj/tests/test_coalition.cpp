#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "tug/coalition.hpp"

using tug::Coalition;
using tug::PlayerId;

TEST_CASE("building and membership", "[coalition]") {
  const Coalition a = Coalition::of({1, 2, 3});
  CHECK(a.mask() == 7);
  CHECK(a.size() == 3);
  CHECK(a.contains(2));
  CHECK_FALSE(a.contains(4));
  CHECK_FALSE(a.contains(0));
  CHECK_FALSE(a.contains(17));

  CHECK(Coalition::of({1, 4}).mask() == 9);
  CHECK(Coalition::single(5).mask() == 16);
  CHECK(Coalition::full(4).mask() == 15);
  CHECK(Coalition::full(0).empty());
  CHECK(Coalition().empty());
  CHECK(Coalition::from_mask(9) == Coalition::of({1, 4}));
}

TEST_CASE("player ids outside 1..16 are rejected", "[coalition]") {
  CHECK_THROWS_AS(Coalition::single(0), tug::InputError);
  CHECK_THROWS_AS(Coalition::single(17), tug::InputError);
  CHECK_THROWS_AS(Coalition::of({1, 17}), tug::InputError);
  CHECK_THROWS_AS(Coalition::from_mask(1u << 16), tug::InputError);
  CHECK_THROWS_AS(Coalition::full(17), tug::InputError);
  CHECK_THROWS_AS(Coalition::full(-1), tug::InputError);
  CHECK_NOTHROW(Coalition::single(16));
  CHECK_NOTHROW(Coalition::full(16));
}

TEST_CASE("set algebra matches reference sets", "[coalition]") {
  std::mt19937_64 rng(11);
  const auto as_set = [](Coalition c) {
    std::set<PlayerId> s;
    for (PlayerId p : c.players()) s.insert(p);
    return s;
  };
  for (int k = 0; k < 500; ++k) {
    const auto a = Coalition::from_mask(rng() % (1u << 16));
    const auto b = Coalition::from_mask(rng() % (1u << 16));
    const auto sa = as_set(a);
    const auto sb = as_set(b);

    std::set<PlayerId> su = sa;
    su.insert(sb.begin(), sb.end());
    CHECK(as_set(a.united(b)) == su);

    std::set<PlayerId> si;
    for (PlayerId p : sa)
      if (sb.count(p)) si.insert(p);
    CHECK(as_set(a.intersected(b)) == si);

    std::set<PlayerId> sd;
    for (PlayerId p : sa)
      if (!sb.count(p)) sd.insert(p);
    CHECK(as_set(a.minus(b)) == sd);

    CHECK(a.subset_of(b) == std::includes(sb.begin(), sb.end(), sa.begin(),
                                          sa.end()));
    CHECK(a.intersects(b) == !si.empty());
    if (a.subset_of(b)) {
      const auto comp = as_set(a.complement_within(b));
      std::set<PlayerId> want;
      for (PlayerId p : sb)
        if (!sa.count(p)) want.insert(p);
      CHECK(comp == want);
    } else {
      CHECK_THROWS_AS(a.complement_within(b), tug::InputError);
    }
  }
}

TEST_CASE("players come back ascending", "[coalition]") {
  const Coalition a = Coalition::of({7, 2, 11});
  CHECK(a.players() == std::vector<PlayerId>{2, 7, 11});
  CHECK(a.min_player() == 2);
  CHECK(a.max_player() == 11);
  CHECK(Coalition().min_player() == 0);
  CHECK(Coalition().max_player() == 0);
}

TEST_CASE("indicator vectors", "[coalition]") {
  const Coalition a = Coalition::of({1, 3});
  CHECK(a.indicator(4) == std::vector<int>{1, 0, 1, 0});
  CHECK(a.indicator(3) == std::vector<int>{1, 0, 1});
  CHECK_THROWS_AS(a.indicator(2), tug::InputError);
}

TEST_CASE("with and without", "[coalition]") {
  const Coalition a = Coalition::of({1, 3});
  CHECK(a.with(2) == Coalition::of({1, 2, 3}));
  CHECK(a.with(3) == a);
  CHECK(a.without(3) == Coalition::single(1));
  CHECK(a.without(2) == a);
  CHECK_THROWS_AS(a.with(0), tug::InputError);
}

TEST_CASE("subset enumeration is ascending and complete", "[coalition]") {
  const Coalition carrier = Coalition::of({1, 3, 4});
  std::vector<std::uint32_t> masks;
  for (Coalition s : tug::subsets_of(carrier)) masks.push_back(s.mask());
  CHECK(masks == std::vector<std::uint32_t>{0, 1, 4, 5, 8, 9, 12, 13});

  masks.clear();
  for (Coalition s : tug::nonempty_subsets_of(carrier))
    masks.push_back(s.mask());
  CHECK(masks == std::vector<std::uint32_t>{1, 4, 5, 8, 9, 12, 13});

  int count = 0;
  for (Coalition s : tug::subsets_of(Coalition())) {
    CHECK(s.empty());
    ++count;
  }
  CHECK(count == 1);
  for (Coalition s : tug::nonempty_subsets_of(Coalition())) {
    (void)s;
    FAIL("the empty carrier has no nonempty subsets");
  }
}

TEST_CASE("printing", "[coalition]") {
  CHECK(Coalition::of({3, 1, 2}).str() == "{1,2,3}");
  CHECK(Coalition().str() == "{}");
  CHECK(Coalition::single(12).str() == "{12}");
}
