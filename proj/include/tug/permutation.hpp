#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tug/coalition.hpp"
#include "tug/error.hpp"

namespace tug {

/// n! for n <= 20.
inline std::uint64_t factorial(int n) {
  if (n < 0) throw InputError("factorial of a negative number");
  if (n > 20) throw OverflowError("factorial beyond 20 exceeds 64 bits");
  std::uint64_t out = 1;
  for (int k = 2; k <= n; ++k) out *= static_cast<std::uint64_t>(k);
  return out;
}

/// An ordering of a coalition's players. The carrier is implied by the
/// entries; orderings over any subset of {1..16} are fine.
class Permutation {
 public:
  explicit Permutation(std::vector<PlayerId> order) : order_(std::move(order)) {
    for (PlayerId p : order_) {
      if (carrier_.contains(p))
        throw InputError("player " + std::to_string(p) +
                         " repeats in permutation");
      carrier_ = carrier_.with(p);
    }
  }

  /// Ascending order of the carrier's players.
  static Permutation identity(Coalition carrier) {
    return Permutation(carrier.players());
  }

  /// Compact digit form, e.g. "142536"; players 1..9 only.
  static Permutation from_digits(std::string_view text) {
    std::vector<PlayerId> order;
    order.reserve(text.size());
    for (char c : text) {
      if (c < '1' || c > '9')
        throw InputError("permutation digits must be 1..9");
      order.push_back(c - '0');
    }
    return Permutation(std::move(order));
  }

  const std::vector<PlayerId>& order() const { return order_; }
  Coalition carrier() const { return carrier_; }
  int size() const { return static_cast<int>(order_.size()); }

  /// Digit form when every player is single-digit, "(2,10,1)" otherwise.
  std::string str() const {
    if (carrier_.max_player() <= 9) {
      std::string s;
      for (PlayerId p : order_) s += static_cast<char>('0' + p);
      return s;
    }
    std::string s = "(";
    for (size_t k = 0; k < order_.size(); ++k) {
      if (k) s += ",";
      s += std::to_string(order_[k]);
    }
    return s + ")";
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<PlayerId> order_;
  Coalition carrier_;
};

/// Players strictly before i in the ordering; i must appear.
inline Coalition predecessors(const Permutation& pi, PlayerId i) {
  Coalition before;
  for (PlayerId p : pi.order()) {
    if (p == i) return before;
    before = before.with(p);
  }
  throw InputError("player " + std::to_string(i) + " not in permutation " +
                   pi.str());
}

/// Deletes every player outside keep, preserving the relative order of the
/// rest; keep must lie within the permutation's carrier.
inline Permutation flatten(const Permutation& pi, Coalition keep) {
  if (!keep.subset_of(pi.carrier()))
    throw InputError("coalition " + keep.str() + " not within permutation " +
                     pi.str());
  std::vector<PlayerId> order;
  order.reserve(static_cast<size_t>(keep.size()));
  for (PlayerId p : pi.order())
    if (keep.contains(p)) order.push_back(p);
  return Permutation(std::move(order));
}

/// Visits every ordering of the carrier's players in lexicographic order.
template <typename F>
void for_each_permutation(Coalition carrier, F&& visit) {
  std::vector<PlayerId> order = carrier.players();
  do {
    visit(Permutation(order));
  } while (std::next_permutation(order.begin(), order.end()));
}

}  // namespace tug
