#pragma once

#include <map>
#include <string>

#include "gwfloor/gw/tilde.hpp"

namespace gwfloor {

/// a + b*eps in F2[eps]/(eps^2 - 1).
struct ResidualElement {
  bool a = false;
  bool b = false;

  static constexpr ResidualElement one() { return {true, false}; }
  static constexpr ResidualElement eps() { return {false, true}; }

  [[nodiscard]] bool is_zero() const { return !a && !b; }

  friend ResidualElement operator+(ResidualElement x, ResidualElement y) { return {x.a != y.a, x.b != y.b}; }
  friend ResidualElement operator*(ResidualElement x, ResidualElement y) {
    return {(x.a && y.a) != (x.b && y.b), (x.a && y.b) != (x.b && y.a)};
  }
  friend bool operator==(ResidualElement, ResidualElement) = default;

  friend std::string to_string(ResidualElement r) {
    if (r.a && r.b) return "1 + e";
    if (r.a) return "1";
    if (r.b) return "e";
    return "0";
  }
};

/// Element of R_s = F2[eps][x_1..x_s]/(eps^2 - 1, x_l^2 - 1).
class ResidualTilde {
 public:
  ResidualTilde() = default;
  explicit ResidualTilde(int s) : s_(s) {}

  static ResidualTilde constant(ResidualElement c, int s) { return monomial(0, c, s); }
  static ResidualTilde monomial(VarMask m, ResidualElement c, int s) {
    ResidualTilde r(s);
    r.add_term(m, c);
    return r;
  }

  [[nodiscard]] int num_vars() const { return s_; }
  [[nodiscard]] const std::map<VarMask, ResidualElement>& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] ResidualElement coefficient(VarMask m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? ResidualElement{} : it->second;
  }
  [[nodiscard]] ResidualElement top_coefficient() const {
    return coefficient(s_ == 0 ? 0 : (VarMask{1} << s_) - 1);
  }

  void add_term(VarMask m, ResidualElement c) {
    if (c.is_zero()) return;
    auto& slot = terms_[m];
    slot = slot + c;
    if (slot.is_zero()) terms_.erase(m);
  }

  friend ResidualTilde operator+(const ResidualTilde& x, const ResidualTilde& y) {
    ResidualTilde r = x;
    for (const auto& [m, c] : y.terms_) r.add_term(m, c);
    return r;
  }
  friend ResidualTilde operator*(const ResidualTilde& x, const ResidualTilde& y) {
    ResidualTilde r(x.s_);
    for (const auto& [ma, ca] : x.terms_)
      for (const auto& [mb, cb] : y.terms_) r.add_term(ma ^ mb, ca * cb);
    return r;
  }
  friend bool operator==(const ResidualTilde& x, const ResidualTilde& y) {
    return x.s_ == y.s_ && x.terms_ == y.terms_;
  }

  friend std::string to_string(const ResidualTilde& t) {
    if (t.terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : t.terms_) {
      if (!out.empty()) out += " + ";
      out += "(" + to_string(c) + ")";
      for (int l : mask_labels(m)) out += "x" + std::to_string(l);
    }
    return out;
  }

 private:
  int s_ = 0;
  std::map<VarMask, ResidualElement> terms_;
};

/// (c1, ch, c2) -> (c1 mod 2) + (c2 mod 2) eps
template <class Int>
ResidualElement residual_reduce(const BasicUniv<Int>& u) {
  return {parity(u.one) == 1, parity(u.two) == 1};
}

template <class Int>
ResidualTilde residual_reduce(const BasicTilde<Int>& t) {
  ResidualTilde r(t.num_vars());
  for (const auto& [m, c] : t.terms()) r.add_term(m, residual_reduce(c));
  return r;
}

}  // namespace gwfloor
