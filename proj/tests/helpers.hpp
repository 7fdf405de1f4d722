#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

#include "tug/game.hpp"
#include "tug/io.hpp"

namespace testutil {

inline tug::Game load_fixture(const std::string& name) {
  const std::string path = std::string(TUG_FIXTURE_DIR) + "/" + name;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("fixture not found: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return tug::parse_game(buf.str());
}

inline std::string fixture_path(const std::string& name) {
  return std::string(TUG_FIXTURE_DIR) + "/" + name;
}

/// Integer in [lo, hi] drawn with the same modulo convention the library's
/// generators use.
inline long long draw_in(std::mt19937_64& rng, long long lo, long long hi) {
  return lo + static_cast<long long>(
                  rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

/// Game with arbitrary integer values in [lo, hi]: no structure guaranteed.
inline tug::Game random_game(std::mt19937_64& rng, int n, long long lo,
                             long long hi) {
  tug::GameBuilder builder(n);
  for (tug::Coalition a : tug::nonempty_subsets_of(tug::Coalition::full(n)))
    builder.set(a, tug::Rational(draw_in(rng, lo, hi)));
  return builder.build();
}

}  // namespace testutil
