#pragma once

#include <utility>
#include <vector>

#include "tug/game.hpp"
#include "tug/permutation.hpp"

namespace tug {

enum class SolutionMethod { shapley, tau, max_marginal_average };

/// Payoffs when players join in the order given by pi: each player receives
/// their marginal contribution to the set of predecessors.
inline Allocation marginal_vector(const Game& g, const Permutation& pi) {
  if (pi.carrier() != g.carrier())
    throw InputError("permutation " + pi.str() + " does not order carrier " +
                     g.carrier().str());
  Allocation x(g.carrier());
  Coalition joined;
  for (PlayerId p : pi.order()) {
    x.set(p, g.value(joined.with(p)) - g.value(joined));
    joined = joined.with(p);
  }
  return x;
}

/// Shapley value as the average marginal vector over all n! orderings.
/// Capped at 10 players; shapley_by_subsets covers larger games.
inline Allocation shapley_by_permutations(const Game& g) {
  if (g.player_count() > 10)
    throw CapError("permutation averaging supports at most 10 players");
  Allocation acc(g.carrier());
  for_each_permutation(g.carrier(), [&](const Permutation& pi) {
    Coalition joined;
    for (PlayerId p : pi.order()) {
      acc.set(p, acc.at(p) + g.value(joined.with(p)) - g.value(joined));
      joined = joined.with(p);
    }
  });
  const Rational count(static_cast<long long>(factorial(g.player_count())));
  for (PlayerId p : g.carrier().players()) acc.set(p, acc.at(p) / count);
  return acc;
}

/// Shapley value by the weighted-subset formula:
/// s_i = sum over A not containing i of |A|!(n-1-|A|)!/n! * (v(A u i) - v(A)).
inline Allocation shapley_by_subsets(const Game& g) {
  const int n = g.player_count();
  const auto n_fact = static_cast<long long>(factorial(n));
  Allocation s(g.carrier());
  for (PlayerId i : g.carrier().players()) {
    Rational acc;
    for (Coalition a : subsets_of(g.carrier().without(i))) {
      const auto weight = static_cast<long long>(
          factorial(a.size()) * factorial(n - 1 - a.size()));
      acc += Rational(weight, n_fact) * (g.value(a.with(i)) - g.value(a));
    }
    s.set(i, acc);
  }
  return s;
}

enum class TauPolicy {
  require_convex,  // reject non-convex games up front
  unchecked,       // skip the convexity check; the caller vouches
};

struct TauDiagnostics {
  Rational lambda;          // weight on the singleton values
  bool essential = false;   // v(N) strictly beats the singleton sum
  bool convexity_checked = false;
};

struct TauResult {
  Allocation allocation;
  TauDiagnostics diagnostics;
};

/// Tau value: the efficient convex combination of the singleton values and
/// the top marginals. Games with v(N) equal to the singleton sum pay each
/// player exactly v({i}) and report lambda = 1.
inline TauResult tau(const Game& g, TauPolicy policy = TauPolicy::require_convex) {
  const bool checked = policy == TauPolicy::require_convex;
  if (checked) {
    const ConvexityReport conv = is_convex(g);
    if (!conv.pass)
      throw ConvexityViolation("tau requires a convex game; v(" +
                               conv.witness->a.str() + ") + v(" +
                               conv.witness->b.str() +
                               ") exceeds the union/intersection sum");
  }
  const GameAggregates agg = aggregates(g);
  const auto ids = g.carrier().players();
  Allocation x(g.carrier());
  TauDiagnostics diag;
  diag.essential = agg.grand_value > agg.singleton_sum;
  diag.convexity_checked = checked;
  if (agg.grand_value == agg.singleton_sum) {
    for (PlayerId p : ids) x.set(p, g.value(Coalition::single(p)));
    diag.lambda = Rational(1);
    return {std::move(x), std::move(diag)};
  }
  if (agg.marginal_sum == agg.singleton_sum)
    throw InputError(
        "tau undefined: marginal sum equals singleton sum but v(N) differs");
  diag.lambda = (agg.marginal_sum - agg.grand_value) /
                (agg.marginal_sum - agg.singleton_sum);
  for (size_t k = 0; k < ids.size(); ++k) {
    const Rational v_i = g.value(Coalition::single(ids[k]));
    x.set(ids[k], diag.lambda * v_i +
                      (Rational(1) - diag.lambda) * agg.top_marginals[k]);
  }
  return {std::move(x), std::move(diag)};
}

struct MmaDiagnostics {
  std::vector<Permutation> maximizers;  // lexicographic order
  Rational max_norm_sq;
};

struct MmaResult {
  Allocation allocation;
  MmaDiagnostics diagnostics;
};

/// Averages the marginal vectors of largest squared Euclidean norm. Ties all
/// enter the average. Capped at 10 players like any full permutation sweep.
inline MmaResult max_marginal_average(const Game& g) {
  if (g.player_count() > 10)
    throw CapError("permutation sweep supports at most 10 players");
  MmaDiagnostics diag;
  std::vector<Allocation> best;
  for_each_permutation(g.carrier(), [&](const Permutation& pi) {
    Allocation x = marginal_vector(g, pi);
    Rational norm_sq;
    for (PlayerId p : g.carrier().players()) norm_sq += x.at(p) * x.at(p);
    if (best.empty() || norm_sq > diag.max_norm_sq) {
      diag.max_norm_sq = norm_sq;
      diag.maximizers.clear();
      best.clear();
    }
    if (norm_sq == diag.max_norm_sq) {
      diag.maximizers.push_back(pi);
      best.push_back(std::move(x));
    }
  });
  Allocation avg(g.carrier());
  const Rational count(static_cast<long long>(best.size()));
  for (PlayerId p : g.carrier().players()) {
    Rational sum;
    for (const Allocation& x : best) sum += x.at(p);
    avg.set(p, sum / count);
  }
  return {std::move(avg), std::move(diag)};
}

/// Uniform entry point used by the tools; diagnostics are dropped.
inline Allocation solve(const Game& g, SolutionMethod method) {
  switch (method) {
    case SolutionMethod::shapley:
      return shapley_by_subsets(g);
    case SolutionMethod::tau:
      return tau(g).allocation;
    case SolutionMethod::max_marginal_average:
      return max_marginal_average(g).allocation;
  }
  throw std::logic_error("unreachable");
}

}  // namespace tug
