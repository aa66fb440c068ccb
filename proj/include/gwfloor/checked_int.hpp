#pragma once

#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <type_traits>

namespace gwfloor {

/// 64-bit signed integer whose arithmetic throws std::overflow_error instead
/// of wrapping.
class CheckedInt {
 public:
  constexpr CheckedInt() noexcept = default;
  constexpr CheckedInt(std::int64_t v) noexcept : v_(v) {}  // NOLINT(implicit)

  [[nodiscard]] constexpr std::int64_t value() const noexcept { return v_; }

  friend CheckedInt operator+(CheckedInt a, CheckedInt b) {
    std::int64_t r = 0;
    if (__builtin_add_overflow(a.v_, b.v_, &r)) throw std::overflow_error("CheckedInt: addition overflow");
    return r;
  }
  friend CheckedInt operator-(CheckedInt a, CheckedInt b) {
    std::int64_t r = 0;
    if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw std::overflow_error("CheckedInt: subtraction overflow");
    return r;
  }
  friend CheckedInt operator*(CheckedInt a, CheckedInt b) {
    std::int64_t r = 0;
    if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw std::overflow_error("CheckedInt: multiplication overflow");
    return r;
  }
  CheckedInt operator-() const { return CheckedInt{0} - *this; }

  CheckedInt& operator+=(CheckedInt o) { return *this = *this + o; }
  CheckedInt& operator-=(CheckedInt o) { return *this = *this - o; }
  CheckedInt& operator*=(CheckedInt o) { return *this = *this * o; }

  friend constexpr bool operator==(CheckedInt, CheckedInt) = default;
  friend constexpr auto operator<=>(CheckedInt, CheckedInt) = default;

  friend std::ostream& operator<<(std::ostream& os, CheckedInt c) { return os << c.v_; }

 private:
  std::int64_t v_ = 0;
};

/// Parity of an integer as 0/1 (also correct for negatives).
template <class Int>
constexpr int parity(const Int& v) {
  if constexpr (std::is_same_v<Int, CheckedInt>) {
    return static_cast<int>(v.value() & 1);
  } else {
    return static_cast<int>(v & 1);
  }
}

template <class Int>
constexpr std::int64_t to_i64(const Int& v) {
  if constexpr (std::is_same_v<Int, CheckedInt>) {
    return v.value();
  } else {
    return static_cast<std::int64_t>(v);
  }
}

}  // namespace gwfloor

template <>
struct std::hash<gwfloor::CheckedInt> {
  std::size_t operator()(gwfloor::CheckedInt c) const noexcept { return std::hash<std::int64_t>{}(c.value()); }
};
