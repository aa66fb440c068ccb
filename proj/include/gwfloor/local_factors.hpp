#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "gwfloor/gw_rings.hpp"

namespace gwfloor {

namespace detail {
inline void require_weight(std::int64_t m) {
  if (m < 1) throw std::invalid_argument("weight must be a positive integer");
}
}  // namespace detail

/// m^{A1} in the verification carrier, with <m> given explicitly.
inline HypUnivElement m_a1_raw(std::int64_t m, SquareClassMonomial m_class) {
  detail::require_weight(m);
  if (m % 2 == 0) return HypUnivElement::hyperbolic(m / 2);
  return HypUnivElement::symbol(m_class) + HypUnivElement::hyperbolic((m - 1) / 2);
}

/// m^{A1} with <m> reduced to its square class in g.
inline HypUnivElement m_a1_raw(std::int64_t m, const SquareClassGroup& g) {
  detail::require_weight(m);
  return m_a1_raw(m, g.class_of(m));
}

/// Rank-m normal form gamma-hat(m, d); d is a square class of the carrier.
inline HypUnivElement gamma_hat_raw(std::int64_t m, SquareClassMonomial m_class, SquareClassMonomial d,
                                    const SquareClassGroup& g) {
  detail::require_weight(m);
  const auto two = g.two(), minus = g.minus_one();
  auto pair = [&](SquareClassMonomial base) {
    // <2 base> + <-2 d base>
    return HypUnivElement::symbol(two * base) + HypUnivElement::symbol(minus * two * d * base);
  };
  if (m % 2 == 1) {
    return HypUnivElement::symbol(m_class) + CheckedInt{(m - 1) / 2} * pair(m_class);
  }
  if (m % 4 == 0) {
    return CheckedInt{m / 4} * pair(m_class) + HypUnivElement::hyperbolic(m / 4);
  }
  return HypUnivElement::unit() + HypUnivElement::symbol(minus * d) + CheckedInt{(m - 2) / 4} * pair(m_class) +
         HypUnivElement::hyperbolic((m - 2) / 4);
}

inline HypUnivElement gamma_hat_raw(std::int64_t m, SquareClassMonomial d, const SquareClassGroup& g) {
  detail::require_weight(m);
  return gamma_hat_raw(m, g.class_of(m), d, g);
}

/// (m^{A1})^2 in GW^univ.
inline UnivElement elevator_square(std::int64_t m) {
  detail::require_weight(m);
  CheckedInt mm = CheckedInt{m} * CheckedInt{m};
  if (m % 2 == 1) return {1, (mm.value() - 1) / 2, 0};
  return {0, mm.value() / 2, 0};
}

/// gamma-hat(m, d_j) m^{A1} in grouped form.
inline TildeElement type_a_factor(std::int64_t m, int j, int s) {
  detail::require_weight(m);
  CheckedInt mm = CheckedInt{m} * CheckedInt{m};
  if (m % 2 == 0) return TildeElement::constant({0, mm.value() / 2, 0}, s);
  const std::int64_t c = (m - 1) / 2;
  auto t = TildeElement::constant({1, (CheckedInt{m} * CheckedInt{m - 1}).value() / 2, c}, s);
#ifdef GWFLOOR_INJECT_TYPE_A_FAULT
  t.add_term(var_bit(j), CheckedInt{c} * UnivElement::sym2());
#else
  t.add_term(var_bit(j), CheckedInt{c} * UnivElement::sym_minus2());
#endif
  return t;
}

/// beta_j = <2> + <2> x_j
inline TildeElement type_r_factor(int j, int s) {
  return TildeElement::constant(UnivElement::sym2(), s) + TildeElement::monomial(var_bit(j), UnivElement::sym2(), s);
}

inline TildeElement twin_edge_factor(std::int64_t m, int i, int s) {
  detail::require_weight(m);
  CheckedInt m2 = CheckedInt{m} * CheckedInt{m};
  CheckedInt hh{(m2 * m2 - m2).value() / 2};
  CheckedInt a = m % 2 == 1 ? CheckedInt{(m2.value() - 1) / 2} : CheckedInt{m2.value() / 2};
  auto pair = TildeElement::one(s) + TildeElement::monomial(var_bit(i), UnivElement::sym_minus1(), s);
  auto r = a * pair + TildeElement::constant({0, hh, 0}, s);
  if (m % 2 == 1) r += TildeElement::one(s);
  return r;
}

struct TwinEdgeEntry {
  std::int64_t weight = 1;
  int label = 1;
  friend bool operator==(const TwinEdgeEntry&, const TwinEdgeEntry&) = default;
};

struct TwinTreeDescriptor {
  int t = 1;
  std::int64_t m_circ = 2;
  std::vector<TwinEdgeEntry> edges;
  std::vector<int> labels;  // double-point labels in marking order

  friend bool operator==(const TwinTreeDescriptor&, const TwinTreeDescriptor&) = default;
};

inline void validate(const TwinTreeDescriptor& d) {
  if (d.labels.empty()) throw std::invalid_argument("twin tree: empty label list");
  if (d.t < 1 || static_cast<std::size_t>(d.t) != d.labels.size())
    throw std::invalid_argument("twin tree: t must equal the number of labels");
  if (d.edges.size() > static_cast<std::size_t>(d.t)) throw std::invalid_argument("twin tree: too many twin edges");
  VarMask seen = 0;
  for (int l : d.labels) {
    if (l < 1 || l > kMaxVars || (seen & var_bit(l))) throw std::invalid_argument("twin tree: labels must be distinct");
    seen |= var_bit(l);
  }
}

/// prod twin edges * <2^{t-1}> * sum_{|I| = m_circ mod 2} x_I
inline TildeElement twin_tree_factor(const TwinTreeDescriptor& d, int s) {
  validate(d);
  auto r = TildeElement::one(s);
  for (const auto& e : d.edges) r *= twin_edge_factor(e.weight, e.label, s);
  const UnivElement power = (d.t - 1) % 2 == 0 ? UnivElement::unit() : UnivElement::sym2();
  TildeElement sum(s);
  const auto t = static_cast<std::uint32_t>(d.t);
  for (std::uint32_t sub = 0; sub < (1u << t); ++sub) {
    if (static_cast<std::int64_t>(std::popcount(sub)) % 2 != d.m_circ % 2) continue;
    VarMask vars = 0;
    for (std::uint32_t i = 0; i < t; ++i)
      if (sub >> i & 1u) vars |= var_bit(d.labels[i]);
    sum.add_term(vars, power);
  }
  return r * sum;
}

struct ElevatorSquare {
  std::int64_t m = 1;
};
struct TypeA {
  std::int64_t m = 1;
  int j = 1;
};
struct TypeR {
  int j = 1;
};
struct TwinEdge {
  std::int64_t m = 1;
  int i = 1;
};
struct TwinTree {
  TwinTreeDescriptor desc;
};
struct UnitEnd {};

using LocalFactor = std::variant<ElevatorSquare, TypeA, TypeR, TwinEdge, TwinTree, UnitEnd>;

inline TildeElement evaluate(const LocalFactor& f, int s) {
  struct V {
    int s;
    TildeElement operator()(const ElevatorSquare& e) const { return TildeElement::constant(elevator_square(e.m), s); }
    TildeElement operator()(const TypeA& a) const { return type_a_factor(a.m, a.j, s); }
    TildeElement operator()(const TypeR& r) const { return type_r_factor(r.j, s); }
    TildeElement operator()(const TwinEdge& e) const { return twin_edge_factor(e.m, e.i, s); }
    TildeElement operator()(const TwinTree& t) const { return twin_tree_factor(t.desc, s); }
    TildeElement operator()(const UnitEnd&) const { return TildeElement::one(s); }
  };
  return std::visit(V{s}, f);
}

/// Residual image of a local factor read off from its parity data.
inline ResidualTilde residual_factor(const LocalFactor& f, int s) {
  using R = ResidualElement;
  struct V {
    int s;
    ResidualTilde one() const { return ResidualTilde::constant(R::one(), s); }
    ResidualTilde zero() const { return ResidualTilde(s); }
    ResidualTilde eps_one_plus_x(int j) const {
      return ResidualTilde::constant(R::eps(), s) + ResidualTilde::monomial(var_bit(j), R::eps(), s);
    }
    ResidualTilde operator()(const ElevatorSquare& e) const { return e.m % 2 ? one() : zero(); }
    ResidualTilde operator()(const TypeA& a) const {
      if (a.m % 2 == 0) return zero();
      if (((a.m - 1) / 2) % 2 == 0) return one();
      return one() + eps_one_plus_x(a.j);
    }
    ResidualTilde operator()(const TypeR& r) const { return eps_one_plus_x(r.j); }
    ResidualTilde operator()(const TwinEdge& e) const { return e.m % 2 ? one() : zero(); }
    ResidualTilde operator()(const TwinTree& t) const {
      validate(t.desc);
      for (const auto& e : t.desc.edges)
        if (e.weight % 2 == 0) return zero();
      const R coeff = (t.desc.t - 1) % 2 == 0 ? R::one() : R::eps();
      ResidualTilde r(s);
      const auto tt = static_cast<std::uint32_t>(t.desc.t);
      for (std::uint32_t sub = 0; sub < (1u << tt); ++sub) {
        if (static_cast<std::int64_t>(std::popcount(sub)) % 2 != t.desc.m_circ % 2) continue;
        VarMask vars = 0;
        for (std::uint32_t i = 0; i < tt; ++i)
          if (sub >> i & 1u) vars |= var_bit(t.desc.labels[i]);
        r.add_term(vars, coeff);
      }
      return r;
    }
    ResidualTilde operator()(const UnitEnd&) const { return one(); }
  };
  return std::visit(V{s}, f);
}

inline std::string factor_name(const LocalFactor& f) {
  static const char* names[] = {"ElevatorSquare", "TypeA", "TypeR", "TwinEdge", "TwinTree", "UnitEnd"};
  return names[f.index()];
}

}  // namespace gwfloor
