#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "helpers.hpp"
#include "tug/generators.hpp"
#include "tug/io.hpp"

using Catch::Matchers::ContainsSubstring;
using tug::Coalition;
using tug::Game;
using tug::GameBuilder;
using tug::Rational;

TEST_CASE("parsing the text format", "[io]") {
  const Game duo = testutil::load_fixture("duo.tug");
  CHECK(duo ==
        GameBuilder(2).set(Coalition::of({1, 2}), Rational(2)).build());

  const Game quartet = testutil::load_fixture("quartet.tug");
  CHECK(quartet.player_count() == 4);
  CHECK(quartet.value(Coalition::of({1, 2})) == Rational(2));
  CHECK(quartet.value(Coalition::of({2, 3, 4})) == Rational(3));
  CHECK(quartet.value(quartet.carrier()) == Rational(6));

  CHECK(testutil::load_fixture("tight_core.tug")
            .value(Coalition::full(3)) == Rational(3, 2));
}

TEST_CASE("parsing tolerates layout noise", "[io]") {
  const Game spaced = tug::parse_game(
      "\n# leading comment\n\n  players\t1  \nv 1 = -7/3   # trailing\n\n");
  CHECK(spaced.player_count() == 1);
  CHECK(spaced.value(Coalition::single(1)) == Rational(-7, 3));

  const Game shuffled = tug::parse_game(
      "players 2\nv 1 2 = 5\nv 2 = 1\nv 1 = 0\n");
  CHECK(shuffled.value(Coalition::of({1, 2})) == Rational(5));
  CHECK(shuffled.value(Coalition::single(2)) == Rational(1));

  // No trailing newline after the last value line.
  CHECK(tug::parse_game("players 1\nv 1 = 4").value(Coalition::single(1)) ==
        Rational(4));
}

TEST_CASE("parse errors carry the line number", "[io]") {
  CHECK_THROWS_WITH(tug::parse_game(""), ContainsSubstring("empty input"));
  CHECK_THROWS_WITH(tug::parse_game("# only a comment\n"),
                    ContainsSubstring("empty input"));
  CHECK_THROWS_WITH(tug::parse_game("game 2\n"),
                    ContainsSubstring("line 1: expected 'players <n>'"));
  CHECK_THROWS_WITH(tug::parse_game("players two\n"),
                    ContainsSubstring("line 1: player count"));
  CHECK_THROWS_WITH(tug::parse_game("players 0\n"),
                    ContainsSubstring("line 1: player count"));
  CHECK_THROWS_WITH(tug::parse_game("players 17\n"),
                    ContainsSubstring("line 1: player count 17 exceeds"));
  CHECK_THROWS_WITH(tug::parse_game("v 1 = 0\nplayers 1\n"),
                    ContainsSubstring("line 1: expected 'players <n>'"));
  CHECK_THROWS_WITH(tug::parse_game("players 1\nw 1 = 0\n"),
                    ContainsSubstring("line 2: expected 'v"));
  CHECK_THROWS_WITH(tug::parse_game("players 1\nv 1 0\n"),
                    ContainsSubstring("line 2: expected 'v"));
  CHECK_THROWS_WITH(tug::parse_game("players 2\nv 1 x = 0\n"),
                    ContainsSubstring("line 2: bad player id 'x'"));
  CHECK_THROWS_WITH(tug::parse_game("players 2\nv 3 = 0\n"),
                    ContainsSubstring("line 2: player 3 out of range"));
  CHECK_THROWS_WITH(tug::parse_game("players 2\nv 1 1 = 0\n"),
                    ContainsSubstring("line 2: player 1 listed twice"));
  CHECK_THROWS_WITH(
      tug::parse_game("players 1\nv 1 = 0\nv 1 = 1\n"),
      ContainsSubstring("line 3: coalition {1} already has a value"));
  CHECK_THROWS_WITH(tug::parse_game("players 1\nv 1 = 1.5\n"),
                    ContainsSubstring("line 2:"));
  CHECK_THROWS_WITH(tug::parse_game("players 1\nv 1 = 1/0\n"),
                    ContainsSubstring("line 2:"));

  // Whole-file completeness has no single offending line; the first missing
  // coalition in ascending mask order is named instead.
  CHECK_THROWS_WITH(tug::parse_game("players 2\nv 1 = 0\nv 1 2 = 3\n"),
                    ContainsSubstring("missing value for coalition {2}"));
}

TEST_CASE("serialization round-trips exactly", "[io]") {
  for (const char* name :
       {"quartet.tug", "trio.tug", "duo.tug", "tight_core.tug",
        "empty_core.tug", "broken_triangle.tug"}) {
    const Game g = testutil::load_fixture(name);
    CHECK(tug::parse_game(tug::serialize_game(g)) == g);
  }

  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    tug::GeneratorConfig cfg;
    cfg.n = 2 + static_cast<int>(seed % 7);
    cfg.seed = seed;
    const Game g = tug::generate(cfg);
    CHECK(tug::parse_game(tug::serialize_game(g)) == g);
  }

  const std::string text = tug::serialize_game(testutil::load_fixture("duo.tug"));
  CHECK(text == "players 2\nv 1 = 0\nv 2 = 0\nv 1 2 = 2\n");

  CHECK_THROWS_AS(
      tug::serialize_game(tug::subgame(testutil::load_fixture("trio.tug"),
                                       Coalition::of({2, 3}))),
      tug::InputError);
}

TEST_CASE("parsing allocations", "[io]") {
  const Coalition carrier = Coalition::full(3);
  const tug::Allocation x =
      tug::parse_allocation("1=1/2,3=-2,2=0", carrier);
  CHECK(x.at(1) == Rational(1, 2));
  CHECK(x.at(2) == Rational(0));
  CHECK(x.at(3) == Rational(-2));
  CHECK(x.total() == Rational(-3, 2));

  CHECK_THROWS_WITH(tug::parse_allocation("1=1,2=2", carrier),
                    ContainsSubstring("misses players {3}"));
  CHECK_THROWS_WITH(tug::parse_allocation("1=1,2=2,3=3,1=0", carrier),
                    ContainsSubstring("player 1 assigned twice"));
  CHECK_THROWS_WITH(tug::parse_allocation("1=1,2=2,4=0", carrier),
                    ContainsSubstring("player 4 not in carrier"));
  CHECK_THROWS_WITH(tug::parse_allocation("1:1", carrier),
                    ContainsSubstring("not <player>=<value>"));
  CHECK_THROWS_WITH(tug::parse_allocation("x=1", carrier),
                    ContainsSubstring("bad player id"));
  CHECK_THROWS_AS(tug::parse_allocation("1=0.5,2=0,3=0", carrier),
                  tug::InputError);
  CHECK_THROWS_AS(tug::parse_allocation("", carrier), tug::InputError);

  // Subgame carriers work too: ids keep their labels.
  const tug::Allocation sub =
      tug::parse_allocation("4=1,2=3/4", Coalition::of({2, 4}));
  CHECK(sub.at(2) == Rational(3, 4));
  CHECK(sub.at(4) == Rational(1));
}
