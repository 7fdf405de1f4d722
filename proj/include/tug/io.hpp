#pragma once

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "tug/game.hpp"

namespace tug {

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  size_t k = 0;
  while (k < line.size()) {
    while (k < line.size() && (line[k] == ' ' || line[k] == '\t')) ++k;
    const size_t start = k;
    while (k < line.size() && line[k] != ' ' && line[k] != '\t') ++k;
    if (k > start) out.push_back(line.substr(start, k - start));
  }
  return out;
}

inline bool parse_player_count(std::string_view text, int& out) {
  const char* first = text.data();
  const char* last = first + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

[[noreturn]] inline void fail_at(int line_no, const std::string& message) {
  throw InputError("line " + std::to_string(line_no) + ": " + message);
}

}  // namespace detail

/// Parses the game text format:
///
///   players 4
///   v 1 = 0
///   v 1 2 = 3/2        # values are exact rationals
///
/// One line per nonempty coalition, every coalition required, '#' starts a
/// comment. Errors carry the offending line number.
inline Game parse_game(std::string_view text) {
  int line_no = 0;
  int n = -1;
  std::vector<bool> seen;
  std::vector<Rational> values;
  size_t remaining = 0;

  size_t pos = 0;
  while (pos <= text.size()) {
    const size_t eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    if (const size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    const auto tokens = detail::split_ws(line);
    if (tokens.empty()) continue;

    if (n < 0) {
      if (tokens.size() != 2 || tokens[0] != "players")
        detail::fail_at(line_no, "expected 'players <n>'");
      if (!detail::parse_player_count(tokens[1], n) || n < 1)
        detail::fail_at(line_no, "player count must be a positive integer");
      if (n > Coalition::kMaxPlayers)
        detail::fail_at(line_no, "player count " + std::to_string(n) +
                                     " exceeds the " +
                                     std::to_string(Coalition::kMaxPlayers) +
                                     "-player cap");
      seen.assign(size_t{1} << n, false);
      values.assign(size_t{1} << n, Rational(0));
      remaining = (size_t{1} << n) - 1;
      continue;
    }

    if (tokens[0] != "v")
      detail::fail_at(line_no, "expected 'v <players> = <value>'");
    if (tokens.size() < 4 || tokens[tokens.size() - 2] != "=")
      detail::fail_at(line_no, "expected 'v <players> = <value>'");

    Coalition coalition;
    for (size_t k = 1; k + 2 < tokens.size(); ++k) {
      int p = 0;
      if (!detail::parse_player_count(tokens[k], p) || p < 1)
        detail::fail_at(line_no, "bad player id '" + std::string(tokens[k]) +
                                     "'");
      if (p > n)
        detail::fail_at(line_no, "player " + std::to_string(p) +
                                     " out of range for players 1.." +
                                     std::to_string(n));
      if (coalition.contains(p))
        detail::fail_at(line_no,
                        "player " + std::to_string(p) + " listed twice");
      coalition = coalition.with(p);
    }
    if (seen[coalition.mask()])
      detail::fail_at(line_no, "coalition " + coalition.str() +
                                   " already has a value");

    Rational value;
    try {
      value = Rational::parse(tokens.back());
    } catch (const InputError& e) {
      detail::fail_at(line_no, e.what());
    }
    values[coalition.mask()] = std::move(value);
    seen[coalition.mask()] = true;
    --remaining;
  }

  if (n < 0) throw InputError("empty input: expected 'players <n>'");
  if (remaining > 0) {
    for (Coalition a : nonempty_subsets_of(Coalition::full(n)))
      if (!seen[a.mask()])
        throw InputError("missing value for coalition " + a.str());
  }
  return Game(Coalition::full(n), std::move(values));
}

/// Writes the text format back out, coalitions in ascending mask order.
/// Round-trips exactly through parse_game. Only games on {1..n} serialize;
/// relabel a subgame first if needed.
inline std::string serialize_game(const Game& g) {
  const int n = g.player_count();
  if (g.carrier() != Coalition::full(n))
    throw InputError("only games on players {1..n} serialize; carrier is " +
                     g.carrier().str());
  std::string out = "players " + std::to_string(n) + "\n";
  for (Coalition a : nonempty_subsets_of(g.carrier())) {
    out += "v";
    for (PlayerId p : a.players()) out += " " + std::to_string(p);
    out += " = " + g.value(a).str() + "\n";
  }
  return out;
}

/// Parses "1=5/3,2=5/3,3=5/3,4=1". Every carrier player must appear exactly
/// once and no one else may.
inline Allocation parse_allocation(std::string_view text, Coalition carrier) {
  Allocation x(carrier);
  Coalition assigned;
  size_t pos = 0;
  while (pos <= text.size()) {
    const size_t comma = text.find(',', pos);
    const std::string_view entry =
        text.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
    pos = comma == std::string_view::npos ? text.size() + 1 : comma + 1;

    const size_t eq = entry.find('=');
    if (eq == std::string_view::npos)
      throw InputError("allocation entry '" + std::string(entry) +
                       "' is not <player>=<value>");
    int p = 0;
    if (!detail::parse_player_count(entry.substr(0, eq), p) || p < 1)
      throw InputError("bad player id in allocation entry '" +
                       std::string(entry) + "'");
    if (!carrier.contains(p))
      throw InputError("player " + std::to_string(p) + " not in carrier " +
                       carrier.str());
    if (assigned.contains(p))
      throw InputError("player " + std::to_string(p) +
                       " assigned twice in allocation");
    x.set(p, Rational::parse(entry.substr(eq + 1)));
    assigned = assigned.with(p);
  }
  if (assigned != carrier)
    throw InputError("allocation misses players " +
                     assigned.complement_within(carrier).str());
  return x;
}

}  // namespace tug
