#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <vector>

#include "tug/game.hpp"

namespace tug {

enum class GenMode {
  dividends,        // nonnegative dividends summed over subsets; always convex
  rejection,        // sorted uniform draws, resampled until convex
  superadditive3p,  // pairwise surpluses plus a dominating grand surplus
};

struct GeneratorConfig {
  GenMode mode = GenMode::dividends;
  int n = 3;
  std::uint64_t seed = 0;
  long long dividend_max = 6;  // inclusive upper bound for every draw
};

namespace detail {

// Integer in [0, bound]. The modulo step is deliberate: reproducibility of
// the (seed, draw index) -> value map matters here, unbiasedness does not,
// and std::uniform_int_distribution is not portable across libraries.
inline long long draw(std::mt19937_64& rng, long long bound) {
  return static_cast<long long>(rng() % static_cast<std::uint64_t>(bound + 1));
}

inline void require(bool ok, const char* message) {
  if (!ok) throw InputError(message);
}

}  // namespace detail

/// Draws a dividend in [0, dividend_max] for every nonempty coalition, in
/// ascending mask order, and values each coalition as the sum of dividends
/// of its nonempty subsets. Nonnegative dividends make the result convex.
inline Game gen_convex_dividends(const GeneratorConfig& cfg) {
  detail::require(cfg.n >= 2 && cfg.n <= 8, "dividends mode needs n in 2..8");
  detail::require(cfg.dividend_max >= 1, "dividend_max must be at least 1");
  std::mt19937_64 rng(cfg.seed);
  const Coalition all = Coalition::full(cfg.n);
  std::vector<Rational> dividend(size_t{1} << cfg.n);
  for (Coalition b : nonempty_subsets_of(all))
    dividend[b.mask()] = Rational(detail::draw(rng, cfg.dividend_max));
  GameBuilder builder(cfg.n);
  for (Coalition a : nonempty_subsets_of(all)) {
    Rational value;
    for (Coalition b : nonempty_subsets_of(a)) value += dividend[b.mask()];
    builder.set(a, value);
  }
  Game game = builder.build();
  if (!is_convex(game).pass)
    throw std::logic_error("dividend construction produced a non-convex game");
  return game;
}

/// Draws one value per nonempty coalition, sorts them ascending, assigns
/// them to coalitions ordered by size then mask, and keeps the first convex
/// outcome. Small n only; the acceptance rate collapses beyond 4 players.
inline Game gen_convex_rejection(const GeneratorConfig& cfg) {
  detail::require(cfg.n >= 2 && cfg.n <= 4, "rejection mode needs n in 2..4");
  detail::require(cfg.dividend_max >= 1, "dividend_max must be at least 1");
  std::mt19937_64 rng(cfg.seed);
  const Coalition all = Coalition::full(cfg.n);
  std::vector<std::uint32_t> slots;
  for (Coalition a : nonempty_subsets_of(all)) slots.push_back(a.mask());
  std::stable_sort(slots.begin(), slots.end(),
                   [](std::uint32_t a, std::uint32_t b) {
                     const int sa = std::popcount(a);
                     const int sb = std::popcount(b);
                     return sa != sb ? sa < sb : a < b;
                   });
  for (int attempt = 0; attempt < 1'000'000; ++attempt) {
    std::vector<long long> values(slots.size());
    for (long long& v : values) v = detail::draw(rng, cfg.dividend_max);
    std::sort(values.begin(), values.end());
    GameBuilder builder(cfg.n);
    for (size_t k = 0; k < slots.size(); ++k)
      builder.set(Coalition::from_mask(slots[k]), Rational(values[k]));
    Game game = builder.build();
    if (is_convex(game).pass) return game;
  }
  throw Error("rejection sampling found no convex game within the attempt cap");
}

/// Draws singleton values and pairwise surpluses in [0, dividend_max], then
/// sets the grand surplus to the largest pairwise surplus plus another draw.
/// That dominance makes the result super-additive, but not always convex.
inline Game gen_superadditive_3p(const GeneratorConfig& cfg) {
  detail::require(cfg.n == 3, "superadditive3p mode needs n = 3");
  detail::require(cfg.dividend_max >= 1, "dividend_max must be at least 1");
  std::mt19937_64 rng(cfg.seed);
  long long v[3];
  for (long long& x : v) x = detail::draw(rng, cfg.dividend_max);
  long long s12 = detail::draw(rng, cfg.dividend_max);
  long long s13 = detail::draw(rng, cfg.dividend_max);
  long long s23 = detail::draw(rng, cfg.dividend_max);
  const long long grand =
      std::max({s12, s13, s23}) + detail::draw(rng, cfg.dividend_max);
  GameBuilder builder(3);
  builder.set(Coalition::of({1}), Rational(v[0]));
  builder.set(Coalition::of({2}), Rational(v[1]));
  builder.set(Coalition::of({3}), Rational(v[2]));
  builder.set(Coalition::of({1, 2}), Rational(v[0] + v[1] + s12));
  builder.set(Coalition::of({1, 3}), Rational(v[0] + v[2] + s13));
  builder.set(Coalition::of({2, 3}), Rational(v[1] + v[2] + s23));
  builder.set(Coalition::of({1, 2, 3}), Rational(v[0] + v[1] + v[2] + grand));
  Game game = builder.build();
  if (!is_superadditive(game).pass)
    throw std::logic_error("surplus construction broke super-additivity");
  return game;
}

inline Game generate(const GeneratorConfig& cfg) {
  switch (cfg.mode) {
    case GenMode::dividends:
      return gen_convex_dividends(cfg);
    case GenMode::rejection:
      return gen_convex_rejection(cfg);
    case GenMode::superadditive3p:
      return gen_superadditive_3p(cfg);
  }
  throw std::logic_error("unreachable");
}

}  // namespace tug
