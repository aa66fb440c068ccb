#pragma once

#include <ostream>
#include <string>
#include <tuple>

#include "gwfloor/checked_int.hpp"

namespace gwfloor {

/// Element of the universal coefficient ring
///   GW^univ = Z[V4] / (<2> + <-2> - h)
/// stored in coordinates over the basis {<1>, h, <2>}.  The multiplication
/// table is: <1> is the unit, h*h = 2h, h*<2> = h, <2>*<2> = <1>.
template <class Int = CheckedInt>
struct BasicUniv {
  Int one{};  // coefficient of <1>
  Int h{};    // coefficient of the hyperbolic form
  Int two{};  // coefficient of <2>

  static constexpr BasicUniv unit() { return {Int{1}, Int{0}, Int{0}}; }
  static constexpr BasicUniv hyperbolic() { return {Int{0}, Int{1}, Int{0}}; }
  static constexpr BasicUniv sym2() { return {Int{0}, Int{0}, Int{1}}; }
  /// <-1> = h - <1>
  static constexpr BasicUniv sym_minus1() { return {Int{-1}, Int{1}, Int{0}}; }
  /// <-2> = h - <2>
  static constexpr BasicUniv sym_minus2() { return {Int{0}, Int{1}, Int{-1}}; }

  [[nodiscard]] bool is_zero() const { return one == Int{0} && h == Int{0} && two == Int{0}; }

  /// Rank homomorphism: rk<1> = rk<2> = 1, rk h = 2.
  [[nodiscard]] Int rank() const { return one + Int{2} * h + two; }
  /// Real signature of the image under GW^univ -> GW(R); <2> maps to <1>.
  [[nodiscard]] Int signature() const { return one + two; }

  friend BasicUniv operator+(const BasicUniv& a, const BasicUniv& b) {
    return {a.one + b.one, a.h + b.h, a.two + b.two};
  }
  friend BasicUniv operator-(const BasicUniv& a, const BasicUniv& b) {
    return {a.one - b.one, a.h - b.h, a.two - b.two};
  }
  BasicUniv operator-() const { return {-one, -h, -two}; }
  friend BasicUniv operator*(const Int& k, const BasicUniv& a) { return {k * a.one, k * a.h, k * a.two}; }
  friend BasicUniv operator*(const BasicUniv& a, const BasicUniv& b) {
    return {
        a.one * b.one + a.two * b.two,
        a.one * b.h + a.h * b.one + a.h * b.two + a.two * b.h + Int{2} * a.h * b.h,
        a.one * b.two + a.two * b.one,
    };
  }
  BasicUniv& operator+=(const BasicUniv& o) { return *this = *this + o; }
  BasicUniv& operator-=(const BasicUniv& o) { return *this = *this - o; }
  BasicUniv& operator*=(const BasicUniv& o) { return *this = *this * o; }

  friend bool operator==(const BasicUniv&, const BasicUniv&) = default;

  friend std::ostream& operator<<(std::ostream& os, const BasicUniv& a) { return os << to_string(a); }

  friend std::string to_string(const BasicUniv& a) {
    std::string out;
    auto term = [&out](std::int64_t c, const char* sym) {
      if (c == 0) return;
      if (!out.empty()) out += c < 0 ? " - " : " + ";
      else if (c < 0) out += "-";
      std::int64_t mag = c < 0 ? -c : c;
      if (mag != 1) out += std::to_string(mag);
      out += sym;
    };
    term(to_i64(a.one), "<1>");
    term(to_i64(a.two), "<2>");
    term(to_i64(a.h), "h");
    return out.empty() ? "0" : out;
  }
};

using UnivElement = BasicUniv<CheckedInt>;

/// Coordinates (n1, n2, m) of n1<1> + n2<2> + m h.
struct UnivCoords {
  std::int64_t n1 = 0;
  std::int64_t n2 = 0;
  std::int64_t m = 0;
  friend bool operator==(const UnivCoords&, const UnivCoords&) = default;
};

template <class Int>
UnivCoords univ_coords(const BasicUniv<Int>& e) {
  return {to_i64(e.one), to_i64(e.two), to_i64(e.h)};
}

template <class Int>
BasicUniv<Int> univ_mul(const BasicUniv<Int>& a, const BasicUniv<Int>& b) {
  return a * b;
}

}  // namespace gwfloor
