#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace kinkxxz {

/// Exact half-integer, stored as twice its value.
///
/// Spins J, local magnetizations m and sector labels M all live on the
/// half-integer lattice; keeping them doubled makes every comparison and
/// sum exact.
class HalfInt {
 public:
  constexpr HalfInt() = default;

  static constexpr HalfInt from_twice(std::int64_t twice) { return HalfInt(twice); }
  static constexpr HalfInt from_int(std::int64_t v) { return HalfInt(2 * v); }

  /// Accepts "3/2", "-1/2", "1.5", "2", "-0.5". Anything that is not an
  /// exact multiple of 1/2 is rejected with std::invalid_argument.
  static HalfInt parse(std::string_view text);

  constexpr std::int64_t twice() const { return twice_; }
  constexpr double value() const { return 0.5 * static_cast<double>(twice_); }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }

  constexpr HalfInt operator-() const { return HalfInt(-twice_); }
  constexpr HalfInt& operator+=(HalfInt o) { twice_ += o.twice_; return *this; }
  constexpr HalfInt& operator-=(HalfInt o) { twice_ -= o.twice_; return *this; }
  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return a += b; }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return a -= b; }
  friend constexpr HalfInt operator*(std::int64_t k, HalfInt a) { return HalfInt(k * a.twice_); }

  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

  /// "3/2", "-1/2", "2".
  std::string to_string() const;

 private:
  constexpr explicit HalfInt(std::int64_t twice) : twice_(twice) {}
  std::int64_t twice_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, HalfInt h) { return os << h.to_string(); }

namespace literals {
constexpr HalfInt operator""_h(unsigned long long v) { return HalfInt::from_int(static_cast<std::int64_t>(v)); }
/// 3_half == 3/2.
constexpr HalfInt operator""_half(unsigned long long v) { return HalfInt::from_twice(static_cast<std::int64_t>(v)); }
}  // namespace literals

}  // namespace kinkxxz
