#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "gwfloor/gw/tilde.hpp"

namespace gwfloor {

struct RealField {
  friend bool operator==(RealField, RealField) = default;
};
struct ClosedField {
  friend bool operator==(ClosedField, ClosedField) = default;
};
/// F_q with q = p^k odd and q > 3.
struct FiniteField {
  std::int64_t q = 5;
  std::int64_t p = 5;
  int k = 1;

  explicit FiniteField(std::int64_t order) : q(order) {
    if (q <= 3 || q % 2 == 0) throw std::invalid_argument("FiniteField: q must be odd and > 3");
    p = 0;
    for (std::int64_t c = 3; c * c <= q; c += 2)
      if (q % c == 0) { p = c; break; }
    if (p == 0) p = q;
    std::int64_t r = q;
    k = 0;
    while (r % p == 0) { r /= p; ++k; }
    if (r != 1) throw std::invalid_argument("FiniteField: q must be a prime power");
  }

  /// -1 is a square iff q = 1 mod 4.
  [[nodiscard]] bool minus_one_nonsquare() const { return q % 4 == 3; }
  /// 2 is a square iff q = +-1 mod 8.
  [[nodiscard]] bool two_nonsquare() const { return q % 8 == 3 || q % 8 == 5; }

  /// Square-class bit of a nonzero integer viewed in F_q.
  [[nodiscard]] bool nonsquare(std::int64_t a) const {
    std::int64_t r = ((a % p) + p) % p;
    if (r == 0) throw std::invalid_argument("parameter vanishes in F_q");
    if (k % 2 == 0) return false;
    // Euler's criterion in F_p
    std::int64_t e = (p - 1) / 2, base = r, acc = 1;
    while (e > 0) {
      if (e & 1) acc = acc * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return acc != 1;
  }

  friend bool operator==(const FiniteField& a, const FiniteField& b) { return a.q == b.q; }
};

using FieldModel = std::variant<RealField, ClosedField, FiniteField>;

inline std::string model_name(const FieldModel& m) {
  if (std::holds_alternative<RealField>(m)) return "real";
  if (std::holds_alternative<ClosedField>(m)) return "closed";
  return "fq:" + std::to_string(std::get<FiniteField>(m).q);
}

/// Image in GW(k): (rank, signature) over R, rank over C, (rank, disc) over F_q.
/// Unused fields stay zero.
struct FieldValue {
  CheckedInt rank{0};
  CheckedInt signature{0};
  int disc = 0;

  [[nodiscard]] bool is_zero() const { return rank == CheckedInt{0} && signature == CheckedInt{0} && disc == 0; }
  friend bool operator==(const FieldValue&, const FieldValue&) = default;
};

inline FieldValue field_add(const FieldValue& a, const FieldValue& b) {
  return {a.rank + b.rank, a.signature + b.signature, a.disc ^ b.disc};
}
inline FieldValue field_neg(const FieldValue& a) { return {-a.rank, -a.signature, a.disc}; }
inline FieldValue field_sub(const FieldValue& a, const FieldValue& b) { return field_add(a, field_neg(b)); }
inline FieldValue field_mul(const FieldValue& a, const FieldValue& b) {
  int disc = (parity(b.rank) * a.disc + parity(a.rank) * b.disc) % 2;
  return {a.rank * b.rank, a.signature * b.signature, disc};
}
inline FieldValue field_scale(CheckedInt k, const FieldValue& a) {
  return {k * a.rank, k * a.signature, parity(k) * a.disc};
}

/// One bit per variable: for RealField 1 means the parameter is negative, for
/// FiniteField 1 means it is a nonsquare; ignored by ClosedField.
using Assignment = std::vector<int>;

/// Image of the rank-one symbol with class bits (minus, two, param-bit).
inline FieldValue symbol_value(const FieldModel& model, bool negative, bool two, int param_bits) {
  if (std::holds_alternative<ClosedField>(model)) return {1, 0, 0};
  if (std::holds_alternative<RealField>(model)) {
    bool neg = negative != (param_bits % 2 == 1);
    return {1, neg ? -1 : 1, 0};
  }
  const auto& f = std::get<FiniteField>(model);
  int bit = (negative && f.minus_one_nonsquare()) ^ (two && f.two_nonsquare()) ^ (param_bits % 2);
  return {1, 0, bit};
}

inline FieldValue hyperbolic_value(const FieldModel& model) {
  return field_add(symbol_value(model, false, false, 0), symbol_value(model, true, false, 0));
}

template <class Int>
FieldValue specialize_univ(const BasicUniv<Int>& u, const FieldModel& model, int param_bits = 0) {
  FieldValue r = field_scale(CheckedInt{to_i64(u.one)}, symbol_value(model, false, false, param_bits));
  r = field_add(r, field_scale(CheckedInt{to_i64(u.two)}, symbol_value(model, false, true, param_bits)));
  r = field_add(r, field_scale(CheckedInt{to_i64(u.h)}, hyperbolic_value(model)));
  return r;
}

/// phi_k on GW~ with x_l sent to the class chosen by assign[l-1].
template <class Int>
FieldValue specialize_field(const BasicTilde<Int>& e, const FieldModel& model, const Assignment& assign) {
  if (static_cast<int>(assign.size()) != e.num_vars()) throw std::invalid_argument("assignment size must equal s");
  FieldValue r;
  for (const auto& [m, c] : e.terms()) {
    int bits = 0;
    for (int l : mask_labels(m)) bits += assign[static_cast<std::size_t>(l - 1)] ? 1 : 0;
    r = field_add(r, specialize_univ(c, model, bits));
  }
  return r;
}

/// Square-class bits for concrete nonzero parameter values d_l.
inline Assignment assignment_from_values(const FieldModel& model, const std::vector<std::int64_t>& values) {
  Assignment a;
  for (auto v : values) {
    if (v == 0) throw std::invalid_argument("parameter value 0 is not a unit");
    if (std::holds_alternative<RealField>(model)) a.push_back(v < 0 ? 1 : 0);
    else if (std::holds_alternative<ClosedField>(model)) a.push_back(0);
    else a.push_back(std::get<FiniteField>(model).nonsquare(v) ? 1 : 0);
  }
  return a;
}

inline std::vector<Assignment> all_assignments(int s) {
  std::vector<Assignment> out;
  for (std::uint32_t mask = 0; mask < (1u << s); ++mask) {
    Assignment a(static_cast<std::size_t>(s));
    for (int l = 0; l < s; ++l) a[static_cast<std::size_t>(l)] = static_cast<int>(mask >> l & 1u);
    out.push_back(a);
  }
  return out;
}

inline std::string assignment_string(const FieldModel& model, const Assignment& a) {
  std::string out;
  for (int b : a) {
    if (!out.empty()) out += ",";
    if (std::holds_alternative<RealField>(model)) out += b ? "-" : "+";
    else if (std::holds_alternative<ClosedField>(model)) out += "*";
    else out += b ? "ns" : "sq";
  }
  return out;
}

}  // namespace gwfloor
