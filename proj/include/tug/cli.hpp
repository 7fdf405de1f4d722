#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tug/analysis.hpp"
#include "tug/game.hpp"
#include "tug/generators.hpp"
#include "tug/io.hpp"
#include "tug/solutions.hpp"

namespace tug::cli {

/// Outcome of one CLI invocation, kept in-process so tools and tests share
/// the exact same code path as the installed binary.
struct RunResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline Game load_game(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return parse_game(text);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

inline SolutionMethod parse_method(const std::string& name) {
  if (name == "shapley") return SolutionMethod::shapley;
  if (name == "tau") return SolutionMethod::tau;
  if (name == "mma") return SolutionMethod::max_marginal_average;
  throw InputError("unknown method '" + name + "'");
}

inline nlohmann::json json_players(Coalition a) {
  nlohmann::json arr = nlohmann::json::array();
  for (PlayerId p : a.players()) arr.push_back(p);
  return arr;
}

inline nlohmann::json json_allocation(const Allocation& x) {
  nlohmann::json obj = nlohmann::json::object();
  for (PlayerId p : x.carrier().players())
    obj[std::to_string(p)] = x.at(p).str();
  return obj;
}

inline void emit(std::ostream& out, const nlohmann::json& doc) {
  out << doc.dump(2) << "\n";
}

inline int cmd_check(const Game& g, bool as_json, std::ostream& out) {
  const ConvexityReport conv = is_convex(g);
  const SuperadditivityReport super = is_superadditive(g);
  const bool essential = is_essential(g);
  const auto yn = [](bool b) { return b ? "yes" : "no"; };
  if (as_json) {
    nlohmann::json doc;
    doc["convex"] = conv.pass;
    doc["superadditive"] = super.pass;
    doc["essential"] = essential;
    if (conv.witness) {
      const auto& w = *conv.witness;
      doc["convexity_witness"] = {
          {"a", json_players(w.a)},
          {"b", json_players(w.b)},
          {"lhs", (g.value(w.a) + g.value(w.b)).str()},
          {"rhs",
           (g.value(w.a.united(w.b)) + g.value(w.a.intersected(w.b))).str()}};
    }
    if (super.witness) {
      const auto& w = *super.witness;
      doc["superadditivity_witness"] = {
          {"a", json_players(w.a)},
          {"b", json_players(w.b)},
          {"lhs", (g.value(w.a) + g.value(w.b)).str()},
          {"rhs", g.value(w.a.united(w.b)).str()}};
    }
    emit(out, doc);
  } else {
    out << "convex: " << yn(conv.pass)
        << ", superadditive: " << yn(super.pass)
        << ", essential: " << yn(essential) << "\n";
    if (conv.witness) {
      const auto& w = *conv.witness;
      out << "convexity witness: v(" << w.a.str() << ") + v(" << w.b.str()
          << ") = " << (g.value(w.a) + g.value(w.b)).str() << " > "
          << (g.value(w.a.united(w.b)) + g.value(w.a.intersected(w.b))).str()
          << " = v(" << w.a.united(w.b).str() << ") + v("
          << w.a.intersected(w.b).str() << ")\n";
    }
    if (super.witness) {
      const auto& w = *super.witness;
      out << "superadditivity witness: v(" << w.a.str() << ") + v("
          << w.b.str() << ") = " << (g.value(w.a) + g.value(w.b)).str()
          << " > " << g.value(w.a.united(w.b)).str() << " = v("
          << w.a.united(w.b).str() << ")\n";
    }
  }
  return conv.pass ? 0 : 1;
}

inline int cmd_solve(const Game& g, const std::string& method_name,
                     bool as_json, std::ostream& out) {
  const SolutionMethod method = parse_method(method_name);
  if (method == SolutionMethod::tau) {
    const TauResult r = tau(g);
    if (as_json) {
      nlohmann::json doc;
      doc["method"] = "tau";
      doc["allocation"] = json_allocation(r.allocation);
      doc["lambda"] = r.diagnostics.lambda.str();
      doc["essential"] = r.diagnostics.essential;
      emit(out, doc);
    } else {
      out << r.allocation.str() << "\n";
      out << "lambda=" << r.diagnostics.lambda.str()
          << " essential=" << (r.diagnostics.essential ? "yes" : "no") << "\n";
    }
    return 0;
  }
  if (method == SolutionMethod::max_marginal_average) {
    const MmaResult r = max_marginal_average(g);
    if (as_json) {
      nlohmann::json doc;
      doc["method"] = "mma";
      doc["allocation"] = json_allocation(r.allocation);
      nlohmann::json maxers = nlohmann::json::array();
      for (const Permutation& pi : r.diagnostics.maximizers)
        maxers.push_back(pi.str());
      doc["maximizers"] = maxers;
      doc["max_norm_sq"] = r.diagnostics.max_norm_sq.str();
      emit(out, doc);
    } else {
      out << r.allocation.str() << "\n";
      out << "L={";
      for (size_t k = 0; k < r.diagnostics.maximizers.size(); ++k) {
        if (k) out << ",";
        out << r.diagnostics.maximizers[k].str();
      }
      out << "}\n";
    }
    return 0;
  }
  const Allocation x = solve(g, method);
  if (as_json) {
    nlohmann::json doc;
    doc["method"] = "shapley";
    doc["allocation"] = json_allocation(x);
    emit(out, doc);
  } else {
    out << x.str() << "\n";
  }
  return 0;
}

inline int cmd_core_test(const Game& g, const std::string& alloc_text,
                         bool as_json, std::ostream& out) {
  const Allocation x = parse_allocation(alloc_text, g.carrier());
  const CoreReport r = in_core(g, x);
  if (as_json) {
    nlohmann::json doc;
    doc["member"] = r.member;
    doc["efficient"] = r.efficient;
    if (r.violation) {
      doc["violation"] = {{"coalition", json_players(r.violation->coalition)},
                          {"allocated", r.violation->allocated.str()},
                          {"value", r.violation->value.str()}};
    }
    emit(out, doc);
  } else {
    out << "member: " << (r.member ? "yes" : "no") << "\n";
    if (!r.efficient)
      out << "not efficient: x(" << g.carrier().str() << ") = "
          << x.total().str() << " != " << g.value(g.carrier()).str() << " = v("
          << g.carrier().str() << ")\n";
    if (r.violation)
      out << "violation: x(" << r.violation->coalition.str() << ") = "
          << r.violation->allocated.str() << " < " << r.violation->value.str()
          << " = v(" << r.violation->coalition.str() << ")\n";
  }
  return r.member ? 0 : 1;
}

inline int cmd_core_nonempty(const Game& g, bool as_json, std::ostream& out) {
  const CoreExistence r = core_nonempty(g);
  if (as_json) {
    nlohmann::json doc;
    doc["nonempty"] = r.nonempty;
    if (r.certificate) doc["certificate"] = json_allocation(*r.certificate);
    emit(out, doc);
  } else {
    out << "nonempty: " << (r.nonempty ? "yes" : "no") << "\n";
    if (r.certificate) out << "certificate: " << r.certificate->str() << "\n";
  }
  return r.nonempty ? 0 : 1;
}

inline int cmd_encourage(const Game& g, const std::string& method_name,
                         bool as_json, std::ostream& out) {
  const SolutionMethod method = parse_method(method_name);
  const EncouragementReport r = encourages_on(g, method);
  if (as_json) {
    nlohmann::json doc;
    doc["method"] = method_name;
    doc["encourages"] = r.encourages;
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& violation : r.violations) {
      arr.push_back({{"player", violation.player},
                     {"coalition", json_players(violation.coalition)},
                     {"grand", violation.grand_payoff.str()},
                     {"sub", violation.sub_payoff.str()}});
    }
    doc["violations"] = arr;
    emit(out, doc);
  } else {
    out << "encourages: " << (r.encourages ? "yes" : "no") << "\n";
    for (const auto& violation : r.violations) {
      out << "player " << violation.player << " prefers "
          << violation.coalition.str() << ": "
          << violation.grand_payoff.str() << " < "
          << violation.sub_payoff.str() << "\n";
    }
  }
  return r.encourages ? 0 : 1;
}

inline int cmd_pmas(const Game& g, const std::string& method_name,
                    bool as_json, std::ostream& out) {
  const SolutionMethod method = parse_method(method_name);
  const PmasReport r = is_pmas(induced_scheme(g, method));
  if (as_json) {
    nlohmann::json doc;
    doc["method"] = method_name;
    doc["monotone"] = r.monotone;
    if (r.violation) {
      doc["violation"] = {{"player", r.violation->player},
                          {"smaller", json_players(r.violation->smaller)},
                          {"larger", json_players(r.violation->larger)},
                          {"pay_smaller", r.violation->pay_smaller.str()},
                          {"pay_larger", r.violation->pay_larger.str()}};
    }
    emit(out, doc);
  } else {
    out << "monotone: " << (r.monotone ? "yes" : "no") << "\n";
    if (r.violation) {
      out << "player " << r.violation->player << " loses moving "
          << r.violation->smaller.str() << " -> " << r.violation->larger.str()
          << ": " << r.violation->pay_smaller.str() << " > "
          << r.violation->pay_larger.str() << "\n";
    }
  }
  return r.monotone ? 0 : 1;
}

inline int cmd_construct_core3(const Game& g, bool as_json,
                               std::ostream& out) {
  const ThreePlayerStats st = three_player_stats(g);
  if (!is_superadditive(g).pass)
    throw InputError("construct-core3 needs a super-additive game");
  const Rational pair_sum = st.surplus12 + st.surplus13 + st.surplus23;
  if (st.grand_surplus < pair_sum / Rational(2)) {
    if (as_json) {
      nlohmann::json doc;
      doc["case"] = "empty";
      doc["grand_surplus"] = st.grand_surplus.str();
      doc["half_pair_sum"] = (pair_sum / Rational(2)).str();
      emit(out, doc);
    } else {
      out << "core is empty: grand surplus " << st.grand_surplus.str()
          << " below half the pair sum " << (pair_sum / Rational(2)).str()
          << "\n";
    }
    return 1;
  }
  const CoreConstruction3p r = construct_core_element_3p(g);
  const bool triangle = r.kind == CoreConstructionCase::triangle;
  if (as_json) {
    nlohmann::json doc;
    doc["case"] = triangle ? "triangle" : "broken-triangle";
    doc["slack"] = r.slack.str();
    doc["allocation"] = json_allocation(r.allocation);
    if (r.surplus_split) {
      nlohmann::json split = nlohmann::json::object();
      const auto ids = g.carrier().players();
      for (int k = 0; k < 3; ++k)
        split[std::to_string(ids[static_cast<size_t>(k)])] =
            (*r.surplus_split)[static_cast<size_t>(k)].str();
      doc["split"] = split;
    }
    emit(out, doc);
  } else {
    out << "case: " << (triangle ? "triangle" : "broken-triangle") << "\n";
    if (r.surplus_split) {
      const auto ids = g.carrier().players();
      out << "split:";
      for (int k = 0; k < 3; ++k)
        out << " " << ids[static_cast<size_t>(k)] << "="
            << (*r.surplus_split)[static_cast<size_t>(k)].str();
      out << "\n";
    }
    out << "slack: " << r.slack.str() << "\n";
    out << "x: " << r.allocation.str() << "\n";
  }
  return 0;
}

inline int cmd_stats3(const Game& g, bool as_json, std::ostream& out) {
  const ThreePlayerStats st = three_player_stats(g);
  const bool super = is_superadditive(g).pass;
  if (as_json) {
    nlohmann::json doc;
    doc["surplus12"] = st.surplus12.str();
    doc["surplus13"] = st.surplus13.str();
    doc["surplus23"] = st.surplus23.str();
    doc["grand"] = st.grand_surplus.str();
    doc["superadditive"] = super;
    if (super) {
      doc["core_nonempty"] = core_nonempty_3p(g);
      doc["convex"] = is_convex_3p_closed_form(g);
    }
    emit(out, doc);
  } else {
    out << "surplus12=" << st.surplus12.str()
        << " surplus13=" << st.surplus13.str()
        << " surplus23=" << st.surplus23.str()
        << " grand=" << st.grand_surplus.str() << "\n";
    out << "superadditive: " << (super ? "yes" : "no") << "\n";
    if (super) {
      out << "core-nonempty: " << (core_nonempty_3p(g) ? "yes" : "no") << "\n";
      out << "convex: " << (is_convex_3p_closed_form(g) ? "yes" : "no")
          << "\n";
    }
  }
  return 0;
}

inline int cmd_gen(const GeneratorConfig& cfg, bool as_json,
                   std::ostream& out) {
  const Game g = generate(cfg);
  if (as_json) {
    nlohmann::json doc;
    doc["players"] = g.player_count();
    nlohmann::json values = nlohmann::json::array();
    for (Coalition a : nonempty_subsets_of(g.carrier()))
      values.push_back(
          {{"coalition", json_players(a)}, {"value", g.value(a).str()}});
    doc["values"] = values;
    emit(out, doc);
  } else {
    out << serialize_game(g);
  }
  return 0;
}

}  // namespace detail

/// Runs the command line given as argv-style arguments (program name
/// excluded). Exit code 0 means the checked property holds or the requested
/// output was produced, 1 means a property failed and a witness was printed,
/// 2 means the input or the invocation was unusable.
inline RunResult run(const std::vector<std::string>& args) {
  RunResult result;
  std::ostringstream out;
  std::ostringstream err;

  CLI::App app{"exact solvers and checks for cooperative games with"
               " transferable utility"};
  app.name("tug");
  app.require_subcommand(1);
  std::string format = "text";
  const auto add_common = [&format](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
  };

  std::string path;
  std::string method = "shapley";
  std::string alloc_text;
  bool want_nonempty = false;

  CLI::App* check = app.add_subcommand(
      "check", "convexity, super-additivity and essentiality of a game");
  check->add_option("file", path, "game file")->required();
  add_common(check);

  CLI::App* solve =
      app.add_subcommand("solve", "compute an allocation for a game");
  solve->add_option("file", path, "game file")->required();
  solve->add_option("--method", method, "shapley, tau or mma")->required();
  add_common(solve);

  CLI::App* core = app.add_subcommand(
      "core", "test core membership or decide core nonemptiness");
  core->add_option("file", path, "game file")->required();
  CLI::Option* test_opt = core->add_option(
      "--test", alloc_text, "allocation to test, e.g. 1=5/3,2=5/3");
  CLI::Option* nonempty_opt = core->add_flag(
      "--nonempty", want_nonempty, "decide nonemptiness, print a certificate");
  test_opt->excludes(nonempty_opt);
  add_common(core);

  CLI::App* encourage = app.add_subcommand(
      "encourage", "does the method favor the grand coalition everywhere");
  encourage->add_option("file", path, "game file")->required();
  encourage->add_option("--method", method, "shapley, tau or mma")->required();
  add_common(encourage);

  CLI::App* pmas = app.add_subcommand(
      "pmas", "is the method's induced scheme population monotonic");
  pmas->add_option("file", path, "game file")->required();
  pmas->add_option("--method", method, "shapley, tau or mma")->required();
  add_common(pmas);

  CLI::App* construct = app.add_subcommand(
      "construct-core3", "build a core member of a 3-player game");
  construct->add_option("file", path, "game file")->required();
  add_common(construct);

  CLI::App* stats3 = app.add_subcommand(
      "stats3", "surplus statistics and closed-form tests, 3 players");
  stats3->add_option("file", path, "game file")->required();
  add_common(stats3);

  GeneratorConfig gen_cfg;
  std::string gen_mode = "dividends";
  CLI::App* gen = app.add_subcommand("gen", "generate a seeded random game");
  gen->add_option("--mode", gen_mode, "dividends, rejection or superadditive3p")
      ->check(CLI::IsMember({"dividends", "rejection", "superadditive3p"}))
      ->capture_default_str();
  gen->add_option("--n", gen_cfg.n, "number of players")
      ->capture_default_str();
  gen->add_option("--seed", gen_cfg.seed, "RNG seed")->capture_default_str();
  gen->add_option("--dividend-max", gen_cfg.dividend_max,
                  "inclusive bound for every draw")
      ->capture_default_str();
  add_common(gen);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::Success& e) {
    result.exit_code = app.exit(e, out, err);
    result.out = out.str();
    result.err = err.str();
    return result;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    result.exit_code = 2;
    result.out = out.str();
    result.err = err.str();
    return result;
  }

  const bool as_json = format == "json";
  try {
    if (gen->parsed()) {
      if (gen_mode == "rejection") gen_cfg.mode = GenMode::rejection;
      if (gen_mode == "superadditive3p")
        gen_cfg.mode = GenMode::superadditive3p;
      result.exit_code = detail::cmd_gen(gen_cfg, as_json, out);
    } else {
      const Game g = detail::load_game(path);
      if (check->parsed()) {
        result.exit_code = detail::cmd_check(g, as_json, out);
      } else if (solve->parsed()) {
        result.exit_code = detail::cmd_solve(g, method, as_json, out);
      } else if (core->parsed()) {
        if ((test_opt->count() > 0) == want_nonempty)
          throw InputError("core needs exactly one of --test and --nonempty");
        result.exit_code =
            want_nonempty ? detail::cmd_core_nonempty(g, as_json, out)
                          : detail::cmd_core_test(g, alloc_text, as_json, out);
      } else if (encourage->parsed()) {
        result.exit_code = detail::cmd_encourage(g, method, as_json, out);
      } else if (pmas->parsed()) {
        result.exit_code = detail::cmd_pmas(g, method, as_json, out);
      } else if (construct->parsed()) {
        result.exit_code = detail::cmd_construct_core3(g, as_json, out);
      } else if (stats3->parsed()) {
        result.exit_code = detail::cmd_stats3(g, as_json, out);
      }
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    result.exit_code = 2;
  }

  result.out = out.str();
  result.err = err.str();
  return result;
}

}  // namespace tug::cli
