#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tug/coalition.hpp"
#include "tug/error.hpp"
#include "tug/rational.hpp"

namespace tug {

/// A transferable-utility game: an exact value for every coalition within a
/// carrier set, with v(empty) = 0.
///
/// The carrier is usually {1..n}, but subgames keep their original player
/// labels, so any nonempty coalition can serve as carrier. Values are stored
/// flat, indexed by coalition mask.
class Game {
 public:
  /// Zero game on players {1..n}.
  explicit Game(int n) : Game(make_zero(n)) {}

  /// Game on an arbitrary carrier. The vector must span every mask up to the
  /// carrier's highest player, with zeros at the empty set and at every mask
  /// that is not a subset of the carrier.
  Game(Coalition carrier, std::vector<Rational> values_by_mask)
      : carrier_(carrier), values_(std::move(values_by_mask)) {
    if (carrier_.empty()) throw InputError("game needs at least one player");
    const size_t want = size_t{1} << carrier_.max_player();
    if (values_.size() != want)
      throw InputError("value table has " + std::to_string(values_.size()) +
                       " entries, expected " + std::to_string(want));
    for (std::uint32_t m = 0; m < values_.size(); ++m) {
      const bool inside = Coalition::from_mask(m).subset_of(carrier_);
      if ((m == 0 || !inside) && !values_[m].is_zero())
        throw InputError("nonzero value at coalition outside the carrier");
    }
  }

  Coalition carrier() const { return carrier_; }
  int player_count() const { return carrier_.size(); }

  const Rational& value(Coalition a) const {
    if (!a.subset_of(carrier_))
      throw InputError("coalition " + a.str() + " not within carrier " +
                       carrier_.str());
    return values_[a.mask()];
  }

  friend bool operator==(const Game&, const Game&) = default;

 private:
  static Game make_zero(int n) {
    if (n < 1) throw InputError("game needs at least one player");
    if (n > Coalition::kMaxPlayers)
      throw CapError("games support at most " +
                     std::to_string(Coalition::kMaxPlayers) + " players");
    return Game(Coalition::full(n),
                std::vector<Rational>(size_t{1} << n));
  }

  Coalition carrier_;
  std::vector<Rational> values_;
};

/// Assembles a Game one coalition value at a time. Unset coalitions stay at
/// zero; assigning the same coalition twice is an error.
class GameBuilder {
 public:
  explicit GameBuilder(int n) : GameBuilder(Coalition::full(checked_n(n))) {}

  explicit GameBuilder(Coalition carrier) : carrier_(carrier) {
    if (carrier_.empty()) throw InputError("game needs at least one player");
    const size_t span = size_t{1} << carrier_.max_player();
    values_.resize(span);
    assigned_.resize(span, false);
  }

  GameBuilder& set(Coalition a, Rational v) {
    if (a.empty()) throw InputError("the empty coalition is fixed at zero");
    if (!a.subset_of(carrier_))
      throw InputError("coalition " + a.str() + " not within carrier " +
                       carrier_.str());
    if (assigned_[a.mask()])
      throw InputError("coalition " + a.str() + " assigned twice");
    values_[a.mask()] = std::move(v);
    assigned_[a.mask()] = true;
    return *this;
  }

  bool is_set(Coalition a) const {
    return a.subset_of(carrier_) && !a.empty() && assigned_[a.mask()];
  }

  Game build() const { return Game(carrier_, values_); }

 private:
  static int checked_n(int n) {
    if (n > Coalition::kMaxPlayers)
      throw CapError("games support at most " +
                     std::to_string(Coalition::kMaxPlayers) + " players");
    return n;
  }

  Coalition carrier_;
  std::vector<Rational> values_;
  std::vector<bool> assigned_;
};

/// Payoff vector over a carrier's players.
class Allocation {
 public:
  Allocation() = default;

  /// All-zero payoffs for the carrier's players.
  explicit Allocation(Coalition carrier) : carrier_(carrier) {
    pay_.resize(static_cast<size_t>(carrier.empty() ? 0 : carrier.max_player()) + 1);
  }

  Coalition carrier() const { return carrier_; }

  const Rational& at(PlayerId p) const {
    require_member(p);
    return pay_[static_cast<size_t>(p)];
  }

  void set(PlayerId p, Rational value) {
    require_member(p);
    pay_[static_cast<size_t>(p)] = std::move(value);
  }

  /// Total payoff of a coalition within the carrier.
  Rational sum(Coalition a) const {
    if (!a.subset_of(carrier_))
      throw InputError("coalition " + a.str() + " not within carrier " +
                       carrier_.str());
    Rational total;
    for (PlayerId p : a.players()) total += pay_[static_cast<size_t>(p)];
    return total;
  }

  Rational total() const { return sum(carrier_); }

  /// "1=5/3 2=5/3 3=5/3 4=1", players in ascending order.
  std::string str() const {
    std::string out;
    for (PlayerId p : carrier_.players()) {
      if (!out.empty()) out += " ";
      out += std::to_string(p) + "=" + at(p).str();
    }
    return out;
  }

  friend bool operator==(const Allocation&, const Allocation&) = default;

 private:
  void require_member(PlayerId p) const {
    if (!carrier_.contains(p))
      throw InputError("player " + std::to_string(p) + " not in carrier " +
                       carrier_.str());
  }

  Coalition carrier_;
  std::vector<Rational> pay_;  // indexed by player id
};

/// v(A u {i}) - v(A); player i must lie in the carrier but outside A.
inline Rational marginal_contribution(const Game& g, PlayerId i, Coalition a) {
  if (!g.carrier().contains(i))
    throw InputError("player " + std::to_string(i) + " not in carrier " +
                     g.carrier().str());
  if (a.contains(i))
    throw InputError("player " + std::to_string(i) + " already in " + a.str());
  return g.value(a.with(i)) - g.value(a);
}

/// The three scalars that drive the tau value, plus each player's marginal
/// contribution to the grand coalition.
struct GameAggregates {
  Coalition carrier;
  std::vector<Rational> top_marginals;  // aligned with carrier.players()
  Rational marginal_sum;                // sum of top marginals
  Rational grand_value;                 // v(carrier)
  Rational singleton_sum;               // sum of v({i})

  const Rational& top_marginal(PlayerId p) const {
    const auto ids = carrier.players();
    for (size_t k = 0; k < ids.size(); ++k)
      if (ids[k] == p) return top_marginals[k];
    throw InputError("player " + std::to_string(p) + " not in carrier " +
                     carrier.str());
  }
};

inline GameAggregates aggregates(const Game& g) {
  GameAggregates out;
  out.carrier = g.carrier();
  out.grand_value = g.value(g.carrier());
  for (PlayerId p : g.carrier().players()) {
    Rational top = marginal_contribution(g, p, g.carrier().without(p));
    out.marginal_sum += top;
    out.top_marginals.push_back(std::move(top));
    out.singleton_sum += g.value(Coalition::single(p));
  }
  return out;
}

/// The grand coalition strictly beats the players acting alone.
inline bool is_essential(const Game& g) {
  const GameAggregates agg = aggregates(g);
  return agg.grand_value > agg.singleton_sum;
}

/// Restriction of the game to a nonempty coalition, keeping player labels.
inline Game subgame(const Game& g, Coalition a) {
  if (a.empty()) throw InputError("subgame needs a nonempty coalition");
  if (!a.subset_of(g.carrier()))
    throw InputError("coalition " + a.str() + " not within carrier " +
                     g.carrier().str());
  std::vector<Rational> values(size_t{1} << a.max_player());
  for (Coalition b : nonempty_subsets_of(a)) values[b.mask()] = g.value(b);
  return Game(a, std::move(values));
}

struct SuperadditivityReport {
  bool pass = true;
  struct Witness {
    Coalition a;
    Coalition b;  // disjoint from a, with v(a) + v(b) > v(a u b)
  };
  std::optional<Witness> witness;
};

/// Checks v(A) + v(B) <= v(A u B) over all disjoint nonempty pairs. The scan
/// runs in ascending mask order and reports the first violating pair.
inline SuperadditivityReport is_superadditive(const Game& g) {
  for (Coalition a : nonempty_subsets_of(g.carrier())) {
    for (Coalition b : nonempty_subsets_of(g.carrier().minus(a))) {
      if (b.mask() < a.mask()) continue;  // each unordered pair once
      if (g.value(a) + g.value(b) > g.value(a.united(b)))
        return {false, SuperadditivityReport::Witness{a, b}};
    }
  }
  return {true, std::nullopt};
}

enum class ConvexityCheck {
  adjacent_marginals,   // m_i(A) <= m_i(A u {j}) over all i, j, A
  pairwise_definition,  // v(A) + v(B) <= v(A u B) + v(A n B) over all pairs
  cross_validate,       // run both; a disagreement is an implementation bug
};

struct ConvexityReport {
  bool pass = true;
  struct Witness {
    Coalition a;
    Coalition b;  // v(a) + v(b) > v(a u b) + v(a n b)
  };
  std::optional<Witness> witness;
};

namespace detail {

inline ConvexityReport convex_by_adjacent_marginals(const Game& g) {
  const auto ids = g.carrier().players();
  for (size_t x = 0; x < ids.size(); ++x) {
    for (size_t y = x + 1; y < ids.size(); ++y) {
      const PlayerId i = ids[x];
      const PlayerId j = ids[y];
      const Coalition rest = g.carrier().without(i).without(j);
      for (Coalition a : subsets_of(rest)) {
        // m_i(a) <= m_i(a u {j}), rewritten over four coalition values.
        if (g.value(a.with(i)) + g.value(a.with(j)) >
            g.value(a.with(i).with(j)) + g.value(a))
          return {false, ConvexityReport::Witness{a.with(i), a.with(j)}};
      }
    }
  }
  return {true, std::nullopt};
}

inline ConvexityReport convex_by_pairwise_definition(const Game& g) {
  for (Coalition a : subsets_of(g.carrier())) {
    for (Coalition b : subsets_of(g.carrier())) {
      if (b.mask() <= a.mask()) continue;  // pairs once; a == b is trivial
      if (g.value(a) + g.value(b) >
          g.value(a.united(b)) + g.value(a.intersected(b)))
        return {false, ConvexityReport::Witness{a, b}};
    }
  }
  return {true, std::nullopt};
}

}  // namespace detail

/// Supermodularity test. The marginal route is the default; the definition
/// route exists to cross-check it, and cross_validate runs both and insists
/// they agree.
inline ConvexityReport is_convex(
    const Game& g, ConvexityCheck check = ConvexityCheck::adjacent_marginals) {
  switch (check) {
    case ConvexityCheck::adjacent_marginals:
      return detail::convex_by_adjacent_marginals(g);
    case ConvexityCheck::pairwise_definition:
      return detail::convex_by_pairwise_definition(g);
    case ConvexityCheck::cross_validate: {
      ConvexityReport fast = detail::convex_by_adjacent_marginals(g);
      ConvexityReport slow = detail::convex_by_pairwise_definition(g);
      if (fast.pass != slow.pass)
        throw std::logic_error("convexity algorithms disagree");
      return fast;
    }
  }
  throw std::logic_error("unreachable");
}

/// Convexity of a 3-player game via six scalar inequalities:
/// for every labeling (i,j,k), v_i + v_j + m_k <= v(N) <= m_i + m_j + v_k,
/// where m_p is p's marginal contribution to the grand coalition.
inline bool is_convex_3p_inequalities(const Game& g) {
  if (g.player_count() != 3)
    throw InputError("inequality test needs exactly 3 players");
  const auto ids = g.carrier().players();
  Rational v[3];
  Rational m[3];
  for (int k = 0; k < 3; ++k) {
    v[k] = g.value(Coalition::single(ids[k]));
    m[k] = marginal_contribution(g, ids[k], g.carrier().without(ids[k]));
  }
  const Rational total = g.value(g.carrier());
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (j == i) continue;
      const int k = 3 - i - j;
      if (v[i] + v[j] + m[k] > total) return false;
      if (total > m[i] + m[j] + v[k]) return false;
    }
  }
  return true;
}

}  // namespace tug
