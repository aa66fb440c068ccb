#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "gwfloor/gw/univ.hpp"

namespace gwfloor {

/// Subset of {1..s} packed as a bitmask; variable x_l is bit (l-1).
using VarMask = std::uint32_t;

inline constexpr int kMaxVars = 24;

inline VarMask var_bit(int label) { return VarMask{1} << (label - 1); }

inline std::vector<int> mask_labels(VarMask m) {
  std::vector<int> out;
  for (int l = 1; m != 0; ++l, m >>= 1)
    if (m & 1u) out.push_back(l);
  return out;
}

/// Element of GW~ = GW^univ[x_1..x_s] / (x_l^2 - 1).  Sparse over subsets, no
/// zero coefficients are stored.
template <class Int = CheckedInt>
class BasicTilde {
 public:
  using Univ = BasicUniv<Int>;
  using Terms = std::map<VarMask, Univ>;

  BasicTilde() = default;
  explicit BasicTilde(int s) : s_(check_s(s)) {}

  static BasicTilde constant(const Univ& c, int s) { return monomial(0, c, s); }
  static BasicTilde one(int s) { return constant(Univ::unit(), s); }
  static BasicTilde monomial(VarMask vars, const Univ& c, int s) {
    BasicTilde t(s);
    if (vars >> s) throw std::invalid_argument("monomial uses a variable beyond s");
    t.add_term(vars, c);
    return t;
  }
  /// x_label with coefficient <1>.
  static BasicTilde var(int label, int s) {
    if (label < 1 || label > s) throw std::invalid_argument("variable label out of range");
    return monomial(var_bit(label), Univ::unit(), s);
  }

  [[nodiscard]] int num_vars() const { return s_; }
  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }

  [[nodiscard]] Univ coefficient(VarMask vars) const {
    auto it = terms_.find(vars);
    return it == terms_.end() ? Univ{} : it->second;
  }

  /// Coefficient of x_1...x_s.
  [[nodiscard]] Univ top_coefficient() const {
    if (s_ == 0) return coefficient(0);
    return coefficient(full_mask());
  }

  [[nodiscard]] VarMask full_mask() const { return s_ == 0 ? 0 : (VarMask{1} << s_) - 1; }

  /// Rank after every x_l is sent to a rank-one class.
  [[nodiscard]] Int rank() const {
    Int r{0};
    for (const auto& [m, c] : terms_) r += c.rank();
    return r;
  }

  void add_term(VarMask vars, const Univ& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(vars, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend BasicTilde operator+(const BasicTilde& a, const BasicTilde& b) {
    check_same(a, b);
    BasicTilde r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
  }
  friend BasicTilde operator-(const BasicTilde& a, const BasicTilde& b) { return a + (-b); }
  BasicTilde operator-() const {
    BasicTilde r(s_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }
  friend BasicTilde operator*(const BasicTilde& a, const BasicTilde& b) {
    check_same(a, b);
    BasicTilde r(a.s_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma ^ mb, ca * cb);
    return r;
  }
  friend BasicTilde operator*(const Univ& u, const BasicTilde& a) { return constant(u, a.s_) * a; }
  friend BasicTilde operator*(const Int& k, const BasicTilde& a) {
    BasicTilde r(a.s_);
    for (const auto& [m, c] : a.terms_) r.add_term(m, k * c);
    return r;
  }
  BasicTilde& operator+=(const BasicTilde& o) { return *this = *this + o; }
  BasicTilde& operator-=(const BasicTilde& o) { return *this = *this - o; }
  BasicTilde& operator*=(const BasicTilde& o) { return *this = *this * o; }

  friend bool operator==(const BasicTilde& a, const BasicTilde& b) { return a.s_ == b.s_ && a.terms_ == b.terms_; }

  /// Same element viewed with more variables.
  [[nodiscard]] BasicTilde widened(int s) const {
    if (s < s_) throw std::invalid_argument("widened: fewer variables");
    BasicTilde r(s);
    r.terms_ = terms_;
    return r;
  }

  /// Substitute x_label = 1 and renumber x_{label+1..s} down by one.
  [[nodiscard]] BasicTilde dissolve(int label) const {
    if (label < 1 || label > s_) throw std::invalid_argument("dissolve: label out of range");
    BasicTilde r(s_ - 1);
    const VarMask low = var_bit(label) - 1;
    for (const auto& [m, c] : terms_) {
      VarMask rest = m & ~var_bit(label);
      r.add_term((rest & low) | ((rest >> 1) & ~low), c);
    }
    return r;
  }

  /// Split into A + x_label * B with A, B free of x_label.
  [[nodiscard]] std::pair<BasicTilde, BasicTilde> affine_split(int label) const {
    BasicTilde a(s_), b(s_);
    const VarMask bit = var_bit(label);
    for (const auto& [m, c] : terms_) {
      if (m & bit) b.terms_.emplace(m ^ bit, c);
      else a.terms_.emplace(m, c);
    }
    return {a, b};
  }

  /// Substitute x_label = 1, keeping the variable count.
  [[nodiscard]] BasicTilde at_one(int label) const {
    auto [a, b] = affine_split(label);
    return a + b;
  }

  /// True when no key contains a bit >= s.
  [[nodiscard]] bool well_formed() const {
    return std::all_of(terms_.begin(), terms_.end(), [&](const auto& kv) { return (kv.first >> s_) == 0; });
  }

  friend std::string to_string(const BasicTilde& t) {
    if (t.terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : t.terms_) {
      if (!out.empty()) out += " + ";
      out += "(" + to_string(c) + ")";
      for (int l : mask_labels(m)) out += "x" + std::to_string(l);
    }
    return out;
  }
  friend std::ostream& operator<<(std::ostream& os, const BasicTilde& t) { return os << to_string(t); }

 private:
  static int check_s(int s) {
    if (s < 0 || s > kMaxVars) throw std::invalid_argument("variable count out of range");
    return s;
  }
  static void check_same(const BasicTilde& a, const BasicTilde& b) {
    if (a.s_ != b.s_) throw std::invalid_argument("TildeElement: mismatched variable count");
  }

  int s_ = 0;
  Terms terms_;
};

using TildeElement = BasicTilde<CheckedInt>;

template <class Int>
BasicUniv<Int> top_coefficient(const BasicTilde<Int>& e) {
  return e.top_coefficient();
}

/// prod_{l in labels} (x_l - <1>)
template <class Int>
BasicTilde<Int> shifted_product(const std::vector<int>& labels, int s) {
  auto r = BasicTilde<Int>::one(s);
  for (int l : labels) r *= BasicTilde<Int>::var(l, s) - BasicTilde<Int>::one(s);
  return r;
}

template <class Int = CheckedInt>
struct BasicCascade {
  std::vector<int> order;               // j_1 .. j_s
  std::vector<BasicTilde<Int>> terms;   // S_1 .. S_s
  BasicUniv<Int> a_full{};
};

using Cascade = BasicCascade<CheckedInt>;

/// Order used by the extraction: label s first, then 1..s-1 ascending.
inline std::vector<int> proof_order(int s) {
  std::vector<int> order;
  if (s == 0) return order;
  order.push_back(s);
  for (int l = 1; l < s; ++l) order.push_back(l);
  return order;
}

/// F_0 = e; F_{q-1} = A_q + x_{j_q} B_q; S_q = A_q + B_q; F_q = B_q.
template <class Int>
BasicCascade<Int> cascade_decompose(const BasicTilde<Int>& e, const std::vector<int>& order) {
  const int s = e.num_vars();
  std::vector<int> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> expect(static_cast<std::size_t>(s));
  std::iota(expect.begin(), expect.end(), 1);
  if (sorted != expect) throw std::invalid_argument("cascade order must be a permutation of 1..s");

  BasicCascade<Int> out;
  out.order = order;
  BasicTilde<Int> f = e;
  for (int j : order) {
    auto [a, b] = f.affine_split(j);
    out.terms.push_back(a + b);
    f = b;
  }
  out.a_full = f.coefficient(0);
  return out;
}

template <class Int>
BasicCascade<Int> cascade_decompose(const BasicTilde<Int>& e) {
  return cascade_decompose(e, proof_order(e.num_vars()));
}

/// q-th summand S_q * prod_{p<q} (x_{j_p} - 1), 0-based q.
template <class Int>
BasicTilde<Int> cascade_summand(const BasicCascade<Int>& c, std::size_t q, int s) {
  std::vector<int> prefix(c.order.begin(), c.order.begin() + static_cast<std::ptrdiff_t>(q));
  return c.terms[q] * shifted_product<Int>(prefix, s);
}

template <class Int>
BasicTilde<Int> cascade_reconstruct(const BasicCascade<Int>& c, int s) {
  BasicTilde<Int> r(s);
  for (std::size_t q = 0; q < c.terms.size(); ++q) r += cascade_summand(c, q, s);
  r += c.a_full * shifted_product<Int>(c.order, s);
  return r;
}

}  // namespace gwfloor
