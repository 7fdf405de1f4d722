#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "tug/game.hpp"
#include "tug/permutation.hpp"
#include "tug/solutions.hpp"

namespace tug {

struct CoreReport {
  bool member = false;
  bool efficient = false;
  struct Violation {
    Coalition coalition;
    Rational allocated;  // x(coalition)
    Rational value;      // v(coalition), strictly larger
  };
  std::optional<Violation> violation;
};

/// Core membership: x must be efficient and give every coalition at least
/// its value. Coalitions are scanned in ascending mask order and the first
/// shortfall is reported.
inline CoreReport in_core(const Game& g, const Allocation& x) {
  if (x.carrier() != g.carrier())
    throw InputError("allocation carrier " + x.carrier().str() +
                     " differs from game carrier " + g.carrier().str());
  CoreReport report;
  report.efficient = x.total() == g.value(g.carrier());
  for (Coalition a : nonempty_subsets_of(g.carrier())) {
    Rational got = x.sum(a);
    if (got < g.value(a)) {
      report.violation = {a, std::move(got), g.value(a)};
      break;
    }
  }
  report.member = report.efficient && !report.violation;
  return report;
}

struct EncouragementReport {
  bool encourages = true;
  struct Violation {
    PlayerId player;
    Coalition coalition;
    Rational grand_payoff;  // player's payoff in the full game
    Rational sub_payoff;    // player's payoff in the subgame, strictly larger
  };
  std::vector<Violation> violations;  // ascending by coalition, then player
};

/// A method encourages the grand coalition when no player does better under
/// the same method in any subgame containing them. Convex games only.
inline EncouragementReport encourages_on(const Game& g, SolutionMethod method) {
  if (!is_convex(g).pass)
    throw ConvexityViolation("encouragement is defined over convex games");
  const Allocation grand = solve(g, method);
  EncouragementReport report;
  for (Coalition a : nonempty_subsets_of(g.carrier())) {
    const Allocation local =
        a == g.carrier() ? grand : solve(subgame(g, a), method);
    for (PlayerId i : a.players()) {
      if (grand.at(i) < local.at(i))
        report.violations.push_back({i, a, grand.at(i), local.at(i)});
    }
  }
  report.encourages = report.violations.empty();
  return report;
}

/// One allocation per nonempty coalition of a carrier.
class AllocationScheme {
 public:
  AllocationScheme() = default;
  explicit AllocationScheme(Coalition carrier) : carrier_(carrier) {}

  Coalition carrier() const { return carrier_; }

  void set(Coalition a, Allocation x) {
    if (a.empty() || !a.subset_of(carrier_))
      throw InputError("coalition " + a.str() + " not usable in a scheme on " +
                       carrier_.str());
    if (x.carrier() != a)
      throw InputError("allocation carrier " + x.carrier().str() +
                       " does not match coalition " + a.str());
    entries_.insert_or_assign(a.mask(), std::move(x));
  }

  const Allocation& at(Coalition a) const {
    const auto it = entries_.find(a.mask());
    if (it == entries_.end())
      throw InputError("scheme has no allocation for " + a.str());
    return it->second;
  }

  bool complete() const {
    for (Coalition a : nonempty_subsets_of(carrier_))
      if (!entries_.contains(a.mask())) return false;
    return true;
  }

 private:
  Coalition carrier_;
  std::map<std::uint32_t, Allocation> entries_;
};

/// Applies one method to the game and every subgame. Convex games only.
inline AllocationScheme induced_scheme(const Game& g, SolutionMethod method) {
  if (!is_convex(g).pass)
    throw ConvexityViolation("induced schemes are defined over convex games");
  AllocationScheme scheme(g.carrier());
  for (Coalition a : nonempty_subsets_of(g.carrier()))
    scheme.set(a, a == g.carrier() ? solve(g, method)
                                   : solve(subgame(g, a), method));
  return scheme;
}

enum class PmasCheck {
  adjacent_pairs,  // compare A against A u {j} only
  all_pairs,       // compare every nested pair
};

struct PmasReport {
  bool monotone = true;
  struct Violation {
    PlayerId player;
    Coalition smaller;
    Coalition larger;
    Rational pay_smaller;  // strictly larger than pay_larger
    Rational pay_larger;
  };
  std::optional<Violation> violation;
};

/// Population monotonicity: growing the coalition never hurts a member.
/// Adjacent pairs suffice because monotone single steps chain across any
/// nested pair; the all_pairs mode re-checks that reduction.
inline PmasReport is_pmas(const AllocationScheme& scheme,
                          PmasCheck mode = PmasCheck::adjacent_pairs) {
  if (!scheme.complete())
    throw InputError("scheme lacks allocations for some coalitions");
  for (Coalition a : nonempty_subsets_of(scheme.carrier())) {
    const Allocation& base = scheme.at(a);
    if (mode == PmasCheck::adjacent_pairs) {
      for (PlayerId j : scheme.carrier().minus(a).players()) {
        const Allocation& bigger = scheme.at(a.with(j));
        for (PlayerId i : a.players()) {
          if (base.at(i) > bigger.at(i))
            return {false, PmasReport::Violation{i, a, a.with(j), base.at(i),
                                                 bigger.at(i)}};
        }
      }
    } else {
      for (Coalition b : nonempty_subsets_of(scheme.carrier())) {
        if (b == a || !a.subset_of(b)) continue;
        const Allocation& bigger = scheme.at(b);
        for (PlayerId i : a.players()) {
          if (base.at(i) > bigger.at(i))
            return {false,
                    PmasReport::Violation{i, a, b, base.at(i), bigger.at(i)}};
        }
      }
    }
  }
  return {true, std::nullopt};
}

struct CoreExistence {
  bool nonempty = false;
  std::optional<Allocation> certificate;  // verified core member when nonempty
};

namespace detail {

// One constraint  sum_k coeffs[k] * y_k >= rhs  over the free payoffs.
struct FmRow {
  std::vector<Rational> coeffs;
  Rational rhs;
};

// Scales a row to primitive integer coefficients, keeping the direction.
inline void fm_canonicalize(FmRow& row) {
  long long den_lcm = 1;
  for (const Rational& c : row.coeffs)
    den_lcm = std::lcm(den_lcm, c.den());
  long long num_gcd = 0;
  for (const Rational& c : row.coeffs)
    num_gcd = std::gcd(num_gcd, c.num() * (den_lcm / c.den()));
  if (num_gcd == 0) return;  // constant row
  const Rational scale(den_lcm, num_gcd);
  for (Rational& c : row.coeffs) c *= scale;
  row.rhs *= scale;
}

// Drops duplicates that differ only in rhs, keeping the tightest bound, and
// flags an infeasible constant row (0 >= positive) when one appears.
inline bool fm_compact(std::vector<FmRow>& rows) {
  std::map<std::vector<long long>, size_t> index;
  std::vector<FmRow> kept;
  for (FmRow& row : rows) {
    fm_canonicalize(row);
    std::vector<long long> key;
    key.reserve(row.coeffs.size());
    bool constant = true;
    for (const Rational& c : row.coeffs) {
      key.push_back(c.num());
      if (!c.is_zero()) constant = false;
    }
    if (constant) {
      if (row.rhs > Rational(0)) return false;
      continue;
    }
    const auto [it, inserted] = index.try_emplace(std::move(key), kept.size());
    if (inserted) {
      kept.push_back(std::move(row));
    } else if (row.rhs > kept[it->second].rhs) {
      kept[it->second].rhs = std::move(row.rhs);
    }
  }
  rows = std::move(kept);
  return true;
}

}  // namespace detail

/// Decides core nonemptiness exactly. Convex games take the shortcut that
/// any marginal vector is a core member; everything else goes through
/// successive variable elimination on the coalition constraints, with the
/// grand-coalition equality substituted out. Capped at 5 players.
inline CoreExistence core_nonempty(const Game& g) {
  if (g.player_count() > 5)
    throw CapError("core feasibility supports at most 5 players");
  if (is_convex(g).pass)
    return {true, marginal_vector(g, Permutation::identity(g.carrier()))};

  const auto ids = g.carrier().players();
  const int vars = static_cast<int>(ids.size()) - 1;
  const Rational total = g.value(g.carrier());

  // x_last = total - sum of the others turns every coalition constraint into
  // a row over y_0..y_{vars-1}.
  std::vector<detail::FmRow> rows;
  for (Coalition a : nonempty_subsets_of(g.carrier())) {
    if (a == g.carrier()) continue;
    detail::FmRow row{std::vector<Rational>(static_cast<size_t>(vars)),
                      g.value(a)};
    if (a.contains(ids.back())) {
      for (int k = 0; k < vars; ++k)
        if (!a.contains(ids[static_cast<size_t>(k)]))
          row.coeffs[static_cast<size_t>(k)] = Rational(-1);
      row.rhs -= total;
    } else {
      for (int k = 0; k < vars; ++k)
        if (a.contains(ids[static_cast<size_t>(k)]))
          row.coeffs[static_cast<size_t>(k)] = Rational(1);
    }
    rows.push_back(std::move(row));
  }

  // Eliminate y_0, y_1, ... in turn, keeping each level's system so a point
  // can be rebuilt afterwards.
  std::vector<std::vector<detail::FmRow>> levels;
  for (int t = 0; t < vars; ++t) {
    if (!detail::fm_compact(rows)) return {false, std::nullopt};
    levels.push_back(rows);
    std::vector<detail::FmRow> next;
    const size_t ut = static_cast<size_t>(t);
    for (const detail::FmRow& low : rows) {
      if (low.coeffs[ut] <= Rational(0)) continue;
      for (const detail::FmRow& high : rows) {
        if (high.coeffs[ut] >= Rational(0)) continue;
        // Positive combination cancelling y_t keeps the direction.
        detail::FmRow mix{std::vector<Rational>(static_cast<size_t>(vars)),
                          Rational(0)};
        const Rational wl = -high.coeffs[ut];
        const Rational wh = low.coeffs[ut];
        for (size_t k = ut + 1; k < mix.coeffs.size(); ++k)
          mix.coeffs[k] = wl * low.coeffs[k] + wh * high.coeffs[k];
        mix.rhs = wl * low.rhs + wh * high.rhs;
        next.push_back(std::move(mix));
      }
    }
    for (detail::FmRow& row : rows) {
      if (row.coeffs[ut].is_zero()) next.push_back(std::move(row));
    }
    rows = std::move(next);
  }
  if (!detail::fm_compact(rows)) return {false, std::nullopt};

  // Feasible. Walk the levels backwards, bounding each variable by the rows
  // that mention it; rows that do not were carried into a later level.
  std::vector<Rational> y(static_cast<size_t>(vars));
  for (int t = vars - 1; t >= 0; --t) {
    const size_t ut = static_cast<size_t>(t);
    std::optional<Rational> lo;
    std::optional<Rational> hi;
    for (const detail::FmRow& row : levels[ut]) {
      const Rational& c = row.coeffs[ut];
      if (c.is_zero()) continue;
      Rational rest = row.rhs;
      for (size_t k = ut + 1; k < row.coeffs.size(); ++k)
        rest -= row.coeffs[k] * y[k];
      const Rational bound = rest / c;
      if (c > Rational(0)) {
        if (!lo || bound > *lo) lo = bound;
      } else {
        if (!hi || bound < *hi) hi = bound;
      }
    }
    if (lo && hi)
      y[ut] = (*lo + *hi) / Rational(2);
    else if (lo)
      y[ut] = *lo;
    else if (hi)
      y[ut] = *hi;
  }

  Allocation cert(g.carrier());
  Rational used;
  for (int k = 0; k < vars; ++k) {
    cert.set(ids[static_cast<size_t>(k)], y[static_cast<size_t>(k)]);
    used += y[static_cast<size_t>(k)];
  }
  cert.set(ids.back(), total - used);
  if (!in_core(g, cert).member)
    throw std::logic_error("core certificate failed verification");
  return {true, std::move(cert)};
}

/// A candidate balanced collection: coalitions with positive weights.
struct BalancedWeighting {
  std::vector<Coalition> sets;
  std::vector<Rational> weights;
};

struct BalancingCheck {
  bool pointwise_ok = false;      // every player's weight load is at most 1
  bool inequality_holds = false;  // weighted values stay at or below v(N)
};

/// The easy direction of the balancedness criterion: when the core is
/// nonempty, every pointwise-admissible weighting satisfies the inequality.
/// The converse is out of scope here.
inline BalancingCheck check_balancing_inequality(const Game& g,
                                                 const BalancedWeighting& w) {
  if (w.sets.size() != w.weights.size())
    throw InputError("weighting has " + std::to_string(w.sets.size()) +
                     " sets but " + std::to_string(w.weights.size()) +
                     " weights");
  for (size_t l = 0; l < w.sets.size(); ++l) {
    if (w.sets[l].empty())
      throw InputError("weighting includes the empty coalition");
    if (!w.sets[l].subset_of(g.carrier()))
      throw InputError("coalition " + w.sets[l].str() + " not within carrier " +
                       g.carrier().str());
    if (w.weights[l] <= Rational(0))
      throw InputError("weight for " + w.sets[l].str() + " must be positive");
  }
  BalancingCheck out;
  out.pointwise_ok = true;
  for (PlayerId i : g.carrier().players()) {
    Rational load;
    for (size_t l = 0; l < w.sets.size(); ++l)
      if (w.sets[l].contains(i)) load += w.weights[l];
    if (load > Rational(1)) {
      out.pointwise_ok = false;
      break;
    }
  }
  Rational lhs;
  for (size_t l = 0; l < w.sets.size(); ++l)
    lhs += w.weights[l] * g.value(w.sets[l]);
  out.inequality_holds = lhs <= g.value(g.carrier());
  return out;
}

/// Cooperation surpluses of a 3-player game: each pair's gain over acting
/// alone and the grand coalition's gain over all three singletons. Indices
/// follow the ascending player order of the carrier.
struct ThreePlayerStats {
  Rational surplus12;
  Rational surplus13;
  Rational surplus23;
  Rational grand_surplus;
};

inline ThreePlayerStats three_player_stats(const Game& g) {
  if (g.player_count() != 3)
    throw InputError("surplus statistics need exactly 3 players");
  const auto ids = g.carrier().players();
  const auto v1 = g.value(Coalition::single(ids[0]));
  const auto v2 = g.value(Coalition::single(ids[1]));
  const auto v3 = g.value(Coalition::single(ids[2]));
  ThreePlayerStats out;
  out.surplus12 = g.value(Coalition::of({ids[0], ids[1]})) - v1 - v2;
  out.surplus13 = g.value(Coalition::of({ids[0], ids[2]})) - v1 - v3;
  out.surplus23 = g.value(Coalition::of({ids[1], ids[2]})) - v2 - v3;
  out.grand_surplus = g.value(g.carrier()) - v1 - v2 - v3;
  return out;
}

namespace detail {

inline ThreePlayerStats superadditive_stats(const Game& g) {
  const ThreePlayerStats stats = three_player_stats(g);
  if (!is_superadditive(g).pass)
    throw InputError("closed form needs a super-additive game");
  return stats;
}

}  // namespace detail

/// Core nonemptiness for super-additive 3-player games: the grand surplus
/// must cover half the pairwise surpluses.
inline bool core_nonempty_3p(const Game& g) {
  const ThreePlayerStats st = detail::superadditive_stats(g);
  const Rational pair_sum = st.surplus12 + st.surplus13 + st.surplus23;
  return st.grand_surplus >= pair_sum / Rational(2);
}

/// Convexity for super-additive 3-player games: the grand surplus must cover
/// every sum of two pairwise surpluses.
inline bool is_convex_3p_closed_form(const Game& g) {
  const ThreePlayerStats st = detail::superadditive_stats(g);
  return st.grand_surplus >= st.surplus12 + st.surplus13 &&
         st.grand_surplus >= st.surplus12 + st.surplus23 &&
         st.grand_surplus >= st.surplus13 + st.surplus23;
}

enum class CoreConstructionCase {
  triangle,         // pairwise surpluses satisfy the triangle inequalities
  broken_triangle,  // one pair's surplus exceeds the other two combined
};

struct CoreConstruction3p {
  Allocation allocation;
  CoreConstructionCase kind = CoreConstructionCase::triangle;
  // Triangle case only: each player's share of the pairwise surpluses.
  std::optional<std::array<Rational, 3>> surplus_split;
  Rational slack;  // the term spread evenly on top of the closed form
};

/// Builds an explicit core member of a super-additive 3-player game whose
/// core is nonempty. In the triangle case the pairwise surpluses split into
/// per-player shares plus an even slack; in the broken case the two players
/// of the dominant pair absorb everything and the third keeps v({k}).
inline CoreConstruction3p construct_core_element_3p(const Game& g) {
  const ThreePlayerStats st = detail::superadditive_stats(g);
  const Rational pair_sum = st.surplus12 + st.surplus13 + st.surplus23;
  if (st.grand_surplus < pair_sum / Rational(2))
    throw InputError("core is empty: grand surplus below half the pair sum");

  const auto ids = g.carrier().players();
  const auto v = [&](int k) {
    return g.value(Coalition::single(ids[static_cast<size_t>(k)]));
  };
  Allocation x(g.carrier());
  CoreConstruction3p out{Allocation(g.carrier()), CoreConstructionCase::triangle,
                         std::nullopt, Rational(0)};

  const bool triangle = st.surplus12 <= st.surplus13 + st.surplus23 &&
                        st.surplus13 <= st.surplus12 + st.surplus23 &&
                        st.surplus23 <= st.surplus12 + st.surplus13;
  if (triangle) {
    std::array<Rational, 3> split;
    split[0] = (st.surplus12 + st.surplus13 - st.surplus23) / Rational(2);
    split[1] = (st.surplus12 + st.surplus23 - st.surplus13) / Rational(2);
    split[2] = (st.surplus13 + st.surplus23 - st.surplus12) / Rational(2);
    out.slack = (st.grand_surplus - pair_sum / Rational(2)) / Rational(3);
    for (int k = 0; k < 3; ++k)
      x.set(ids[static_cast<size_t>(k)], v(k) + split[static_cast<size_t>(k)] +
                                             out.slack);
    out.surplus_split = std::move(split);
  } else {
    out.kind = CoreConstructionCase::broken_triangle;
    // Super-additivity keeps surpluses nonnegative, so at most one pair can
    // exceed the other two combined.
    int i = 0, j = 1, k = 2;
    Rational si = st.surplus13;  // surplus of {i,k}
    Rational sj = st.surplus23;  // surplus of {j,k}
    if (st.surplus13 > st.surplus12 + st.surplus23) {
      i = 0, j = 2, k = 1;
      si = st.surplus12;
      sj = st.surplus23;
    } else if (st.surplus23 > st.surplus12 + st.surplus13) {
      i = 1, j = 2, k = 0;
      si = st.surplus12;
      sj = st.surplus13;
    }
    out.slack = (st.grand_surplus - si - sj) / Rational(2);
    x.set(ids[static_cast<size_t>(i)], v(i) + si + out.slack);
    x.set(ids[static_cast<size_t>(j)], v(j) + sj + out.slack);
    x.set(ids[static_cast<size_t>(k)], v(k));
  }
  out.allocation = std::move(x);
  if (!in_core(g, out.allocation).member)
    throw std::logic_error("constructed core element failed verification");
  return out;
}

}  // namespace tug
