#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace frobword {

/// Exact half-integer: the value is `twice() / 2`.
///
/// Main terms, offsets, F-sequence terms and interval endpoints of the
/// ternary analysis all live in (1/2)Z, so every quantity there is closed
/// under the operations provided here and no division ever happens.
class Half {
 public:
  constexpr Half() = default;
  constexpr Half(std::int64_t integer) : twice_(2 * integer) {}  // NOLINT

  static constexpr Half from_twice(std::int64_t twice) {
    Half h;
    h.twice_ = twice;
    return h;
  }

  constexpr std::int64_t twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }

  /// Throws std::domain_error if the value is not integral.
  std::int64_t to_integer() const;

  constexpr std::int64_t floor() const {
    return twice_ >= 0 ? twice_ / 2 : -((-twice_ + 1) / 2);
  }
  constexpr std::int64_t ceil() const { return -(-*this).floor(); }

  constexpr Half abs() const { return twice_ < 0 ? -*this : *this; }

  constexpr Half operator-() const { return from_twice(-twice_); }
  constexpr Half& operator+=(Half o) {
    twice_ += o.twice_;
    return *this;
  }
  constexpr Half& operator-=(Half o) {
    twice_ -= o.twice_;
    return *this;
  }
  constexpr Half& operator*=(std::int64_t k) {
    twice_ *= k;
    return *this;
  }

  friend constexpr Half operator+(Half a, Half b) { return a += b; }
  friend constexpr Half operator-(Half a, Half b) { return a -= b; }
  friend constexpr Half operator*(Half a, std::int64_t k) { return a *= k; }
  friend constexpr Half operator*(std::int64_t k, Half a) { return a *= k; }

  friend constexpr bool operator==(Half, Half) = default;
  friend constexpr auto operator<=>(Half, Half) = default;

  /// Exact decimal rendering: "3", "2.5", "-0.5".
  std::string to_string() const;

 private:
  std::int64_t twice_ = 0;
};

constexpr Half half_of(std::int64_t integer) { return Half::from_twice(integer); }

constexpr Half max(Half a, Half b) { return a < b ? b : a; }
constexpr Half min(Half a, Half b) { return b < a ? b : a; }

}  // namespace frobword
