#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace pindex {

/// A half-integer stored as twice its value, so index arithmetic stays exact.
class HalfIndex {
 public:
  constexpr HalfIndex() = default;

  static constexpr HalfIndex from_doubled(std::int64_t doubled) { return HalfIndex(doubled); }
  static constexpr HalfIndex from_int(std::int64_t value) { return HalfIndex(2 * value); }

  constexpr std::int64_t doubled() const { return doubled_; }
  constexpr double value() const { return static_cast<double>(doubled_) / 2.0; }
  constexpr bool is_integral() const { return doubled_ % 2 == 0; }

  constexpr HalfIndex operator-() const { return HalfIndex(-doubled_); }
  constexpr HalfIndex& operator+=(HalfIndex o) {
    doubled_ += o.doubled_;
    return *this;
  }
  constexpr HalfIndex& operator-=(HalfIndex o) {
    doubled_ -= o.doubled_;
    return *this;
  }
  friend constexpr HalfIndex operator+(HalfIndex a, HalfIndex b) { return a += b; }
  friend constexpr HalfIndex operator-(HalfIndex a, HalfIndex b) { return a -= b; }
  friend constexpr HalfIndex operator*(std::int64_t k, HalfIndex a) { return HalfIndex(k * a.doubled_); }

  friend constexpr auto operator<=>(HalfIndex, HalfIndex) = default;

  /// Always rendered with denominator 2, e.g. "-2/2" or "3/2".
  std::string to_string() const { return std::to_string(doubled_) + "/2"; }

  /// Accepts "p/2" or a plain integer.
  static HalfIndex parse(std::string_view text);

 private:
  constexpr explicit HalfIndex(std::int64_t doubled) : doubled_(doubled) {}

  std::int64_t doubled_ = 0;
};

}  // namespace pindex
