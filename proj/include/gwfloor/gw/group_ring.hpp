#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gwfloor/gw/univ.hpp"

namespace gwfloor {

/// Exponent bits over the generator list of a SquareClassGroup.
struct SquareClassMonomial {
  std::uint64_t bits = 0;

  [[nodiscard]] bool is_identity() const { return bits == 0; }
  friend SquareClassMonomial operator*(SquareClassMonomial a, SquareClassMonomial b) { return {a.bits ^ b.bits}; }
  friend auto operator<=>(SquareClassMonomial, SquareClassMonomial) = default;
};

/// Ordered generator list: -1, 2, odd primes ascending, then formal symbols.
class SquareClassGroup {
 public:
  static constexpr int kMinusOne = 0;
  static constexpr int kTwo = 1;

  /// primes: odd primes (ascending, deduplicated by the caller); formal: names
  /// of free generators such as "d" or "x1".
  SquareClassGroup(std::vector<std::int64_t> primes, std::vector<std::string> formal) {
    names_ = {"-1", "2"};
    for (auto p : primes) {
      if (p < 3 || p % 2 == 0) throw std::invalid_argument("SquareClassGroup: expected odd primes");
      if (!primes_.empty() && p <= primes_.back()) throw std::invalid_argument("SquareClassGroup: primes must ascend");
      primes_.push_back(p);
      names_.push_back(std::to_string(p));
    }
    for (auto& f : formal) names_.push_back(f);
    if (names_.size() > 64) throw std::invalid_argument("SquareClassGroup: too many generators");
  }

  /// The Klein four-group {1, -1, 2, -2}.
  static SquareClassGroup v4() { return SquareClassGroup({}, {}); }

  /// Group with every odd prime <= bound plus the formal symbols.
  static SquareClassGroup with_primes_up_to(std::int64_t bound, std::vector<std::string> formal) {
    std::vector<std::int64_t> ps;
    for (std::int64_t p = 3; p <= bound; p += 2) {
      bool prime = true;
      for (std::int64_t q = 3; q * q <= p; q += 2)
        if (p % q == 0) { prime = false; break; }
      if (prime) ps.push_back(p);
    }
    return SquareClassGroup(std::move(ps), std::move(formal));
  }

  [[nodiscard]] int size() const { return static_cast<int>(names_.size()); }
  [[nodiscard]] const std::vector<std::string>& names() const { return names_; }

  [[nodiscard]] SquareClassMonomial generator(int index) const {
    if (index < 0 || index >= size()) throw std::out_of_range("generator index");
    return {std::uint64_t{1} << index};
  }
  [[nodiscard]] SquareClassMonomial minus_one() const { return generator(kMinusOne); }
  [[nodiscard]] SquareClassMonomial two() const { return generator(kTwo); }

  [[nodiscard]] SquareClassMonomial formal(const std::string& name) const {
    for (int i = 2 + static_cast<int>(primes_.size()); i < size(); ++i)
      if (names_[static_cast<std::size_t>(i)] == name) return generator(i);
    throw std::invalid_argument("unknown formal generator " + name);
  }

  /// Square class of a nonzero integer.
  [[nodiscard]] SquareClassMonomial class_of(std::int64_t n) const {
    if (n == 0) throw std::invalid_argument("square class of 0");
    std::uint64_t bits = 0;
    if (n < 0) { bits ^= 1u; n = -n; }
    while (n % 2 == 0) { n /= 2; bits ^= 2u; }
    for (std::size_t i = 0; i < primes_.size() && n > 1; ++i) {
      while (n % primes_[i] == 0) { n /= primes_[i]; bits ^= std::uint64_t{1} << (2 + i); }
    }
    if (n != 1) throw std::invalid_argument("square class needs a prime missing from the group");
    return {bits};
  }

  [[nodiscard]] std::string symbol(SquareClassMonomial m) const {
    if (m.is_identity()) return "1";
    std::string out;
    for (int i = 0; i < size(); ++i) {
      if (!(m.bits >> i & 1u)) continue;
      if (!out.empty()) out += "*";
      out += names_[static_cast<std::size_t>(i)];
    }
    return out;
  }

  friend bool operator==(const SquareClassGroup&, const SquareClassGroup&) = default;

 private:
  std::vector<std::int64_t> primes_;
  std::vector<std::string> names_;
};

/// Element of the integral group ring Z[G]; no Witt relations.
class GroupRingElement {
 public:
  GroupRingElement() = default;

  static GroupRingElement symbol(SquareClassMonomial m, CheckedInt c = 1) {
    GroupRingElement e;
    e.add(m, c);
    return e;
  }

  [[nodiscard]] const std::map<SquareClassMonomial, CheckedInt>& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }

  void add(SquareClassMonomial m, CheckedInt c) {
    if (c == CheckedInt{0}) return;
    auto& slot = terms_[m];
    slot += c;
    if (slot == CheckedInt{0}) terms_.erase(m);
  }

  friend GroupRingElement operator+(const GroupRingElement& a, const GroupRingElement& b) {
    GroupRingElement r = a;
    for (const auto& [m, c] : b.terms_) r.add(m, c);
    return r;
  }
  friend GroupRingElement operator-(const GroupRingElement& a, const GroupRingElement& b) {
    GroupRingElement r = a;
    for (const auto& [m, c] : b.terms_) r.add(m, -c);
    return r;
  }
  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
    GroupRingElement r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add(ma * mb, ca * cb);
    return r;
  }
  friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

 private:
  std::map<SquareClassMonomial, CheckedInt> terms_;
};

/// Element of Z[G]/(<g> + <-g> - <1> - <-1>) over the basis <1>, h and one
/// representative <g> per pair {g, -g} (the one without the -1 exponent).
class HypUnivElement {
 public:
  HypUnivElement() = default;

  static HypUnivElement unit() { return symbol(SquareClassMonomial{}); }
  static HypUnivElement hyperbolic(CheckedInt c = 1) {
    HypUnivElement e;
    e.h_ = c;
    return e;
  }
  /// <m> for any monomial, reduced to the basis.
  static HypUnivElement symbol(SquareClassMonomial m, CheckedInt c = 1) {
    HypUnivElement e;
    e.add_symbol(m, c);
    return e;
  }
  /// Embed n1<1> + m h + n2<2>.
  static HypUnivElement from_univ(const UnivElement& u) {
    HypUnivElement e;
    e.add_symbol(SquareClassMonomial{}, u.one);
    e.add_symbol(SquareClassMonomial{1u << SquareClassGroup::kTwo}, u.two);
    e.h_ = u.h;
    return e;
  }

  [[nodiscard]] CheckedInt h() const { return h_; }
  [[nodiscard]] const std::map<SquareClassMonomial, CheckedInt>& symbols() const { return sym_; }
  [[nodiscard]] CheckedInt coefficient(SquareClassMonomial rep) const {
    auto it = sym_.find(rep);
    return it == sym_.end() ? CheckedInt{0} : it->second;
  }
  [[nodiscard]] bool is_zero() const { return sym_.empty() && h_ == CheckedInt{0}; }
  [[nodiscard]] CheckedInt rank() const {
    CheckedInt r = CheckedInt{2} * h_;
    for (const auto& [m, c] : sym_) r += c;
    return r;
  }

  /// Back to GW^univ when only <1>, <2>, h occur.
  [[nodiscard]] std::optional<UnivElement> to_univ() const {
    UnivElement u{0, h_, 0};
    for (const auto& [m, c] : sym_) {
      if (m.bits == 0) u.one = c;
      else if (m.bits == (1u << SquareClassGroup::kTwo)) u.two = c;
      else return std::nullopt;
    }
    return u;
  }

  friend HypUnivElement operator+(const HypUnivElement& a, const HypUnivElement& b) {
    HypUnivElement r = a;
    for (const auto& [m, c] : b.sym_) r.add_symbol(m, c);
    r.h_ += b.h_;
    return r;
  }
  friend HypUnivElement operator-(const HypUnivElement& a, const HypUnivElement& b) {
    return a + CheckedInt{-1} * b;
  }
  friend HypUnivElement operator*(CheckedInt k, const HypUnivElement& a) {
    HypUnivElement r;
    for (const auto& [m, c] : a.sym_) r.add_symbol(m, k * c);
    r.h_ = k * a.h_;
    return r;
  }
  friend HypUnivElement operator*(const HypUnivElement& a, const HypUnivElement& b) {
    HypUnivElement r;
    CheckedInt sum_a{0}, sum_b{0};
    for (const auto& [ma, ca] : a.sym_) {
      sum_a += ca;
      for (const auto& [mb, cb] : b.sym_) r.add_symbol(ma * mb, ca * cb);
    }
    for (const auto& [mb, cb] : b.sym_) sum_b += cb;
    // h<g> = h, h^2 = 2h
    r.h_ += a.h_ * sum_b + b.h_ * sum_a + CheckedInt{2} * a.h_ * b.h_;
    return r;
  }
  friend bool operator==(const HypUnivElement&, const HypUnivElement&) = default;

  [[nodiscard]] std::string to_string(const SquareClassGroup& g) const {
    std::string out;
    for (const auto& [m, c] : sym_) {
      if (!out.empty()) out += " + ";
      out += std::to_string(c.value()) + "<" + g.symbol(m) + ">";
    }
    if (h_ != CheckedInt{0}) out += (out.empty() ? "" : " + ") + std::to_string(h_.value()) + "h";
    return out.empty() ? "0" : out;
  }

 private:
  void add_symbol(SquareClassMonomial m, CheckedInt c) {
    if (c == CheckedInt{0}) return;
    constexpr std::uint64_t minus = 1u << SquareClassGroup::kMinusOne;
    if (m.bits & minus) {
      // <-g> = h - <g>
      h_ += c;
      m.bits ^= minus;
      c = -c;
    }
    auto& slot = sym_[m];
    slot += c;
    if (slot == CheckedInt{0}) sym_.erase(m);
  }

  std::map<SquareClassMonomial, CheckedInt> sym_;
  CheckedInt h_{0};
};

inline HypUnivElement hyp_univ_reduce(const GroupRingElement& e, const SquareClassGroup& g) {
  if (g.size() < 1) throw std::invalid_argument("generator list must contain -1");
  HypUnivElement r;
  for (const auto& [m, c] : e.terms()) {
    if (m.bits >> g.size()) throw std::invalid_argument("monomial outside the generator list");
    r = r + HypUnivElement::symbol(m, c);
  }
  return r;
}

}  // namespace gwfloor
