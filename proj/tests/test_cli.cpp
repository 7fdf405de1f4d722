#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "helpers.hpp"
#include "json.hpp"
#include "tug/cli.hpp"

using Catch::Matchers::ContainsSubstring;
using tug::cli::RunResult;
using tug::cli::run;

namespace {

std::string fx(const char* name) { return testutil::fixture_path(name); }

}  // namespace

TEST_CASE("check prints one verdict line plus witnesses", "[cli]") {
  const RunResult quartet = run({"check", fx("quartet.tug")});
  CHECK(quartet.exit_code == 0);
  CHECK(quartet.out == "convex: yes, superadditive: yes, essential: yes\n");
  CHECK(quartet.err.empty());

  const RunResult tight = run({"check", fx("tight_core.tug")});
  CHECK(tight.exit_code == 1);
  CHECK(tight.out ==
        "convex: no, superadditive: yes, essential: yes\n"
        "convexity witness: v({1,3}) + v({2,3}) = 2 > 3/2 = v({1,2,3}) + "
        "v({3})\n");
}

TEST_CASE("solve prints the allocation and method diagnostics", "[cli]") {
  const RunResult shapley =
      run({"solve", fx("quartet.tug"), "--method", "shapley"});
  CHECK(shapley.exit_code == 0);
  CHECK(shapley.out == "1=5/3 2=5/3 3=5/3 4=1\n");

  const RunResult tau = run({"solve", fx("quartet.tug"), "--method", "tau"});
  CHECK(tau.exit_code == 0);
  CHECK(tau.out ==
        "1=18/11 2=18/11 3=18/11 4=12/11\n"
        "lambda=5/11 essential=yes\n");

  const RunResult mma = run({"solve", fx("trio.tug"), "--method", "mma"});
  CHECK(mma.exit_code == 0);
  CHECK(mma.out ==
        "1=3 2=1/2 3=1/2\n"
        "L={231,321}\n");

  // tau rejects non-convex games; that is an input problem, not a witness.
  const RunResult rejected =
      run({"solve", fx("tight_core.tug"), "--method", "tau"});
  CHECK(rejected.exit_code == 2);
  CHECK(rejected.out.empty());
  CHECK_THAT(rejected.err, ContainsSubstring("error: tau requires a convex"));
}

TEST_CASE("core membership test and nonemptiness decision", "[cli]") {
  const RunResult member = run(
      {"core", fx("quartet.tug"), "--test", "1=18/11,2=18/11,3=18/11,4=12/11"});
  CHECK(member.exit_code == 0);
  CHECK(member.out == "member: yes\n");

  const RunResult blocked =
      run({"core", fx("quartet.tug"), "--test", "1=6,2=0,3=0,4=0"});
  CHECK(blocked.exit_code == 1);
  CHECK(blocked.out ==
        "member: no\n"
        "violation: x({2,3}) = 0 < 1 = v({2,3})\n");

  const RunResult wasteful =
      run({"core", fx("duo.tug"), "--test", "1=0,2=0"});
  CHECK(wasteful.exit_code == 1);
  CHECK(wasteful.out ==
        "member: no\n"
        "not efficient: x({1,2}) = 0 != 2 = v({1,2})\n"
        "violation: x({1,2}) = 0 < 2 = v({1,2})\n");

  const RunResult tight = run({"core", fx("tight_core.tug"), "--nonempty"});
  CHECK(tight.exit_code == 0);
  CHECK(tight.out ==
        "nonempty: yes\n"
        "certificate: 1=1/2 2=1/2 3=1/2\n");

  const RunResult empty = run({"core", fx("empty_core.tug"), "--nonempty"});
  CHECK(empty.exit_code == 1);
  CHECK(empty.out == "nonempty: no\n");

  const RunResult neither = run({"core", fx("duo.tug")});
  CHECK(neither.exit_code == 2);
  CHECK_THAT(neither.err, ContainsSubstring("exactly one of"));
}

TEST_CASE("encourage reports preferring players", "[cli]") {
  const RunResult good =
      run({"encourage", fx("quartet.tug"), "--method", "shapley"});
  CHECK(good.exit_code == 0);
  CHECK(good.out == "encourages: yes\n");

  const RunResult bad = run({"encourage", fx("quartet.tug"), "--method", "tau"});
  CHECK(bad.exit_code == 1);
  CHECK(bad.out ==
        "encourages: no\n"
        "player 1 prefers {1,2,3}: 18/11 < 12/7\n");

  const RunResult mma = run({"encourage", fx("trio.tug"), "--method", "mma"});
  CHECK(mma.exit_code == 1);
  CHECK(mma.out ==
        "encourages: no\n"
        "player 2 prefers {1,2}: 1/2 < 1\n"
        "player 3 prefers {1,3}: 1/2 < 1\n");
}

TEST_CASE("pmas reports the first monotonicity break", "[cli]") {
  const RunResult good = run({"pmas", fx("quartet.tug"), "--method", "shapley"});
  CHECK(good.exit_code == 0);
  CHECK(good.out == "monotone: yes\n");

  const RunResult bad = run({"pmas", fx("quartet.tug"), "--method", "tau"});
  CHECK(bad.exit_code == 1);
  CHECK(bad.out ==
        "monotone: no\n"
        "player 1 loses moving {1,2,3} -> {1,2,3,4}: 12/7 > 18/11\n");
}

TEST_CASE("three-player construction and statistics", "[cli]") {
  const RunResult triangle = run({"construct-core3", fx("tight_core.tug")});
  CHECK(triangle.exit_code == 0);
  CHECK(triangle.out ==
        "case: triangle\n"
        "split: 1=1/2 2=1/2 3=1/2\n"
        "slack: 0\n"
        "x: 1=1/2 2=1/2 3=1/2\n");

  const RunResult broken = run({"construct-core3", fx("broken_triangle.tug")});
  CHECK(broken.exit_code == 0);
  CHECK(broken.out ==
        "case: broken-triangle\n"
        "slack: 3/2\n"
        "x: 1=5/2 2=5/2 3=0\n");

  const RunResult empty = run({"construct-core3", fx("empty_core.tug")});
  CHECK(empty.exit_code == 1);
  CHECK(empty.out ==
        "core is empty: grand surplus 1 below half the pair sum 3/2\n");

  const RunResult stats = run({"stats3", fx("trio.tug")});
  CHECK(stats.exit_code == 0);
  CHECK(stats.out ==
        "surplus12=2 surplus13=2 surplus23=1 grand=4\n"
        "superadditive: yes\n"
        "core-nonempty: yes\n"
        "convex: yes\n");

  const RunResult wrong_size = run({"stats3", fx("quartet.tug")});
  CHECK(wrong_size.exit_code == 2);
  CHECK_THAT(wrong_size.err, ContainsSubstring("exactly 3 players"));
}

TEST_CASE("json output is machine readable", "[cli]") {
  const RunResult check =
      run({"check", fx("tight_core.tug"), "--format", "json"});
  CHECK(check.exit_code == 1);
  const auto check_doc = nlohmann::json::parse(check.out);
  CHECK(check_doc.at("convex") == false);
  CHECK(check_doc.at("superadditive") == true);
  CHECK(check_doc.at("essential") == true);
  CHECK(check_doc.at("convexity_witness").at("a") ==
        nlohmann::json::array({1, 3}));
  CHECK(check_doc.at("convexity_witness").at("lhs") == "2");
  CHECK_FALSE(check_doc.contains("superadditivity_witness"));

  const RunResult tau =
      run({"solve", fx("quartet.tug"), "--method", "tau", "--format", "json"});
  const auto tau_doc = nlohmann::json::parse(tau.out);
  CHECK(tau_doc.at("method") == "tau");
  CHECK(tau_doc.at("lambda") == "5/11");
  CHECK(tau_doc.at("essential") == true);
  CHECK(tau_doc.at("allocation").at("1") == "18/11");
  CHECK(tau_doc.at("allocation").at("4") == "12/11");

  const RunResult mma =
      run({"solve", fx("trio.tug"), "--method", "mma", "--format", "json"});
  const auto mma_doc = nlohmann::json::parse(mma.out);
  CHECK(mma_doc.at("maximizers") == nlohmann::json::array({"231", "321"}));
  CHECK(mma_doc.at("max_norm_sq") == "10");

  const RunResult encourage = run(
      {"encourage", fx("quartet.tug"), "--method", "tau", "--format", "json"});
  const auto enc_doc = nlohmann::json::parse(encourage.out);
  CHECK(enc_doc.at("encourages") == false);
  REQUIRE(enc_doc.at("violations").size() == 1);
  CHECK(enc_doc.at("violations")[0].at("player") == 1);
  CHECK(enc_doc.at("violations")[0].at("coalition") ==
        nlohmann::json::array({1, 2, 3}));
  CHECK(enc_doc.at("violations")[0].at("grand") == "18/11");
  CHECK(enc_doc.at("violations")[0].at("sub") == "12/7");

  const RunResult core = run(
      {"core", fx("quartet.tug"), "--test", "1=6,2=0,3=0,4=0", "--format",
       "json"});
  const auto core_doc = nlohmann::json::parse(core.out);
  CHECK(core_doc.at("member") == false);
  CHECK(core_doc.at("efficient") == true);
  CHECK(core_doc.at("violation").at("coalition") ==
        nlohmann::json::array({2, 3}));

  const RunResult pmas =
      run({"pmas", fx("quartet.tug"), "--method", "tau", "--format", "json"});
  const auto pmas_doc = nlohmann::json::parse(pmas.out);
  CHECK(pmas_doc.at("monotone") == false);
  CHECK(pmas_doc.at("violation").at("pay_smaller") == "12/7");

  const RunResult construct =
      run({"construct-core3", fx("tight_core.tug"), "--format", "json"});
  const auto cons_doc = nlohmann::json::parse(construct.out);
  CHECK(cons_doc.at("case") == "triangle");
  CHECK(cons_doc.at("split").at("2") == "1/2");
  CHECK(cons_doc.at("slack") == "0");

  const RunResult stats =
      run({"stats3", fx("trio.tug"), "--format", "json"});
  const auto stats_doc = nlohmann::json::parse(stats.out);
  CHECK(stats_doc.at("grand") == "4");
  CHECK(stats_doc.at("core_nonempty") == true);
}

TEST_CASE("gen emits a game in the requested format", "[cli]") {
  const RunResult text = run({"gen", "--n", "4", "--seed", "9"});
  CHECK(text.exit_code == 0);
  tug::GeneratorConfig cfg;
  cfg.n = 4;
  cfg.seed = 9;
  CHECK(tug::parse_game(text.out) == tug::generate(cfg));

  const RunResult again = run({"gen", "--n", "4", "--seed", "9"});
  CHECK(again.out == text.out);

  const RunResult json = run(
      {"gen", "--mode", "superadditive3p", "--seed", "3", "--format", "json"});
  CHECK(json.exit_code == 0);
  const auto doc = nlohmann::json::parse(json.out);
  CHECK(doc.at("players") == 3);
  CHECK(doc.at("values").size() == 7);
  CHECK(doc.at("values")[0].at("coalition") == nlohmann::json::array({1}));

  const RunResult bad = run({"gen", "--mode", "rejection", "--n", "5"});
  CHECK(bad.exit_code == 2);
  CHECK_THAT(bad.err, ContainsSubstring("rejection mode needs n in 2..4"));
}

TEST_CASE("invocation problems exit with code 2", "[cli]") {
  CHECK(run({}).exit_code == 2);
  CHECK(run({"frobnicate"}).exit_code == 2);
  CHECK(run({"solve", fx("duo.tug")}).exit_code == 2);  // --method missing
  CHECK(run({"solve", fx("duo.tug"), "--method", "nucleolus"}).exit_code == 2);
  CHECK(run({"check", "/no/such/file.tug"}).exit_code == 2);
  CHECK(run({"core", fx("duo.tug"), "--test", "1=1,2=1", "--nonempty"})
            .exit_code == 2);
  CHECK(run({"check", fx("duo.tug"), "--format", "yaml"}).exit_code == 2);

  const RunResult parse_error = run({"check", fx("quartet.tug"), "--format"});
  CHECK(parse_error.exit_code == 2);

  const RunResult bad_game = run({"core", fx("empty_core.tug"), "--test",
                                  "1=oops,2=0,3=0"});
  CHECK(bad_game.exit_code == 2);
  CHECK_THAT(bad_game.err, ContainsSubstring("error: "));

  const RunResult help = run({"--help"});
  CHECK(help.exit_code == 0);
  CHECK_THAT(help.out, ContainsSubstring("check"));
  CHECK_THAT(help.out, ContainsSubstring("gen"));
}

TEST_CASE("repeated invocations are byte-identical", "[cli]") {
  const std::vector<std::vector<std::string>> invocations = {
      {"check", fx("quartet.tug")},
      {"solve", fx("quartet.tug"), "--method", "tau", "--format", "json"},
      {"core", fx("tight_core.tug"), "--nonempty"},
      {"encourage", fx("trio.tug"), "--method", "mma"},
      {"gen", "--mode", "rejection", "--n", "3", "--seed", "11"},
  };
  for (const auto& args : invocations) {
    const RunResult a = run(args);
    const RunResult b = run(args);
    CHECK(a.exit_code == b.exit_code);
    CHECK(a.out == b.out);
    CHECK(a.err == b.err);
  }
}
