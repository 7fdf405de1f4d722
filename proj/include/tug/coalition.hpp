#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "tug/error.hpp"

namespace tug {

/// 1-based player identifier.
using PlayerId = int;

/// A set of players encoded as a bitmask: player i occupies bit i-1.
///
/// The encoding caps games at 16 players. Masks order coalitions totally;
/// iterating masks in increasing order is the canonical traversal used by
/// every deterministic scan in the library.
class Coalition {
 public:
  static constexpr int kMaxPlayers = 16;

  constexpr Coalition() = default;

  static Coalition of(std::initializer_list<PlayerId> players) {
    Coalition c;
    for (PlayerId p : players) c = c.with(p);
    return c;
  }

  static Coalition from_mask(std::uint32_t mask) {
    if (mask >= (1u << kMaxPlayers))
      throw InputError("coalition mask uses players beyond " +
                       std::to_string(kMaxPlayers));
    Coalition c;
    c.mask_ = mask;
    return c;
  }

  /// The full player set {1..n}.
  static Coalition full(int n) {
    if (n < 0 || n > kMaxPlayers)
      throw InputError("player count " + std::to_string(n) +
                       " outside 0.." + std::to_string(kMaxPlayers));
    Coalition c;
    c.mask_ = (n == 0) ? 0u : ((1u << n) - 1u);
    return c;
  }

  static Coalition single(PlayerId p) { return Coalition().with(p); }

  std::uint32_t mask() const { return mask_; }
  bool empty() const { return mask_ == 0; }
  int size() const { return std::popcount(mask_); }

  bool contains(PlayerId p) const {
    return p >= 1 && p <= kMaxPlayers && (mask_ >> (p - 1)) & 1u;
  }
  bool subset_of(Coalition other) const { return (mask_ & ~other.mask_) == 0; }
  bool intersects(Coalition other) const { return (mask_ & other.mask_) != 0; }

  Coalition united(Coalition other) const { return raw(mask_ | other.mask_); }
  Coalition intersected(Coalition other) const {
    return raw(mask_ & other.mask_);
  }
  Coalition minus(Coalition other) const { return raw(mask_ & ~other.mask_); }

  Coalition with(PlayerId p) const { return raw(mask_ | bit(p)); }
  Coalition without(PlayerId p) const { return raw(mask_ & ~bit(p)); }

  /// Set difference universe \ this; requires this to lie within universe.
  Coalition complement_within(Coalition universe) const {
    if (!subset_of(universe))
      throw InputError("coalition " + str() + " not within " + universe.str());
    return raw(universe.mask_ & ~mask_);
  }

  /// Smallest/largest member id, 0 when empty.
  PlayerId min_player() const {
    return mask_ == 0 ? 0 : std::countr_zero(mask_) + 1;
  }
  PlayerId max_player() const {
    return mask_ == 0 ? 0 : std::bit_width(mask_);
  }

  /// Member ids in ascending order.
  std::vector<PlayerId> players() const {
    std::vector<PlayerId> out;
    out.reserve(static_cast<size_t>(size()));
    for (std::uint32_t rest = mask_; rest != 0; rest &= rest - 1)
      out.push_back(std::countr_zero(rest) + 1);
    return out;
  }

  /// 0/1 membership vector of length n; members must not exceed n.
  std::vector<int> indicator(int n) const {
    if (!subset_of(full(n)))
      throw InputError("coalition " + str() + " not within {1.." +
                       std::to_string(n) + "}");
    std::vector<int> out(static_cast<size_t>(n), 0);
    for (PlayerId p : players()) out[static_cast<size_t>(p - 1)] = 1;
    return out;
  }

  /// "{1,2,3}"; the empty set prints as "{}".
  std::string str() const {
    std::string s = "{";
    bool first = true;
    for (PlayerId p : players()) {
      if (!first) s += ",";
      s += std::to_string(p);
      first = false;
    }
    return s + "}";
  }

  friend bool operator==(Coalition, Coalition) = default;
  friend auto operator<=>(Coalition, Coalition) = default;

 private:
  static std::uint32_t bit(PlayerId p) {
    if (p < 1 || p > kMaxPlayers)
      throw InputError("player id " + std::to_string(p) + " outside 1.." +
                       std::to_string(kMaxPlayers));
    return 1u << (p - 1);
  }
  static Coalition raw(std::uint32_t mask) {
    Coalition c;
    c.mask_ = mask;
    return c;
  }

  std::uint32_t mask_ = 0;
};

/// Range over all subsets of a carrier in ascending mask order, the empty
/// set first and the carrier itself last. Usable in range-for and safe to
/// break out of.
class SubsetRange {
 public:
  explicit SubsetRange(Coalition carrier, bool skip_empty)
      : carrier_(carrier.mask()), skip_empty_(skip_empty) {}

  struct sentinel {};

  class iterator {
   public:
    iterator(std::uint32_t current, std::uint32_t carrier, bool done)
        : current_(current), carrier_(carrier), done_(done) {}

    Coalition operator*() const { return Coalition::from_mask(current_); }

    iterator& operator++() {
      if (current_ == carrier_) {
        done_ = true;
      } else {
        current_ = (current_ - carrier_) & carrier_;
      }
      return *this;
    }

    bool operator!=(sentinel) const { return !done_; }

   private:
    std::uint32_t current_;
    std::uint32_t carrier_;
    bool done_;
  };

  iterator begin() const {
    if (!skip_empty_) return iterator(0, carrier_, false);
    if (carrier_ == 0) return iterator(0, carrier_, true);
    return iterator((0u - carrier_) & carrier_, carrier_, false);
  }
  sentinel end() const { return {}; }

 private:
  std::uint32_t carrier_;
  bool skip_empty_;
};

inline SubsetRange subsets_of(Coalition carrier) {
  return SubsetRange(carrier, false);
}

inline SubsetRange nonempty_subsets_of(Coalition carrier) {
  return SubsetRange(carrier, true);
}

}  // namespace tug
