#pragma once

#include <charconv>
#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>
#include <string_view>

#include "tug/error.hpp"

namespace tug {

/// Exact fraction, always in lowest terms with a positive denominator.
///
/// Numerator and denominator are 64-bit; every operation runs its
/// intermediates in 128-bit arithmetic and throws OverflowError if the
/// reduced result no longer fits. Nothing ever rounds.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(long long value) : num_(value) {}
  Rational(long long numerator, long long denominator)
      : Rational(make(numerator, denominator)) {}

  long long num() const { return num_; }
  long long den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                i128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                i128(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw Error("rational division by zero");
    return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }
  Rational operator-() const { return make(-i128(num_), den_); }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    // Denominators are positive, so cross multiplication keeps the order.
    const i128 lhs = i128(a.num_) * b.den_;
    const i128 rhs = i128(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  Rational abs() const { return num_ < 0 ? -*this : *this; }

  /// "p/q", or just "p" when the value is an integer.
  std::string str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

  /// Accepts "p" and "p/q" with an optional leading minus. Anything else,
  /// including a zero denominator, is an InputError.
  static Rational parse(std::string_view text) {
    const auto bad = [&] {
      return InputError("malformed rational '" + std::string(text) + "'");
    };
    const auto slash = text.find('/');
    long long num = 0;
    long long den = 1;
    if (!parse_int(text.substr(0, slash), true, num)) throw bad();
    if (slash != std::string_view::npos) {
      if (!parse_int(text.substr(slash + 1), false, den)) throw bad();
      if (den == 0) throw bad();
    }
    return Rational(num, den);
  }

 private:
  // GCC/Clang extension; wide intermediates keep cross products exact.
  __extension__ using i128 = __int128;

  static bool parse_int(std::string_view text, bool allow_sign,
                        long long& out) {
    if (text.empty()) return false;
    if (!allow_sign && text.front() == '-') return false;
    const char* first = text.data();
    const char* last = first + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
  }

  static i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      const i128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static Rational make(i128 num, i128 den) {
    if (den == 0) throw InputError("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const i128 g = gcd128(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    constexpr i128 lo = std::numeric_limits<long long>::min();
    constexpr i128 hi = std::numeric_limits<long long>::max();
    if (num < lo || num > hi || den > hi)
      throw OverflowError("rational out of 64-bit range after reduction");
    Rational r;
    r.num_ = static_cast<long long>(num);
    r.den_ = static_cast<long long>(den);
    return r;
  }

  long long num_ = 0;
  long long den_ = 1;
};

}  // namespace tug
