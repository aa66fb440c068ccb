#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "gwfloor/gw/tilde.hpp"

namespace gwfloor {

/// unit * u^vars with unit in {1, -1, 2, -2}.
struct FormEntry {
  int unit = 1;
  VarMask vars = 0;

  /// Entry for a nonzero integer times a monomial; square factors are removed
  /// and the square-free part must be +-1 or +-2.
  static FormEntry reduced(std::int64_t value, VarMask vars = 0) {
    if (value == 0) throw std::invalid_argument("form entries must be nonzero");
    int sign = value < 0 ? -1 : 1;
    std::int64_t v = value < 0 ? -value : value;
    for (std::int64_t p = 2; p * p <= v; ++p)
      while (v % (p * p) == 0) v /= p * p;
    if (v != 1 && v != 2) throw std::invalid_argument("form entries are limited to +-1, +-2 up to squares");
    return {sign * static_cast<int>(v), vars};
  }

  friend FormEntry operator*(FormEntry a, FormEntry b) {
    std::int64_t prod = static_cast<std::int64_t>(a.unit) * b.unit;
    return reduced(prod, a.vars ^ b.vars);
  }
  friend bool operator==(const FormEntry&, const FormEntry&) = default;
};

struct DiagonalForm {
  std::vector<FormEntry> entries;

  [[nodiscard]] std::size_t rank() const { return entries.size(); }
  [[nodiscard]] DiagonalForm scaled(FormEntry c) const {
    DiagonalForm r;
    for (const auto& e : entries) r.entries.push_back(e * c);
    return r;
  }
  friend bool operator==(const DiagonalForm&, const DiagonalForm&) = default;
};

/// <1, -2> (x) <1, -u_1> (x) ... (x) <1, -u_s>
inline DiagonalForm pfister_concrete(int s) {
  if (s < 0 || s > kMaxVars) throw std::invalid_argument("pfister_concrete: s out of range");
  DiagonalForm f{{{1, 0}, {-2, 0}}};
  for (int l = 1; l <= s; ++l) {
    auto twisted = f.scaled({-1, var_bit(l)});
    f.entries.insert(f.entries.end(), twisted.entries.begin(), twisted.entries.end());
  }
  return f;
}

struct SpringerParts {
  DiagonalForm unit;
  DiagonalForm uniformizer;
};

/// Partition by the exponent of u_label; the uniformizer part has u_label removed.
inline SpringerParts springer_split(const DiagonalForm& f, int label) {
  SpringerParts r;
  const VarMask bit = var_bit(label);
  for (const auto& e : f.entries) {
    if (e.vars & bit) r.uniformizer.entries.push_back({e.unit, e.vars ^ bit});
    else r.unit.entries.push_back(e);
  }
  return r;
}

enum class Verdict { Anisotropic, Isotropic, Unsupported };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Anisotropic: return "aniso";
    case Verdict::Isotropic: return "iso";
    case Verdict::Unsupported: return "unsupported";
  }
  return "?";
}

namespace detail {

/// Base case over Q for entries in {+-1, +-2}.
inline Verdict rational_verdict(const DiagonalForm& f) {
  const auto n = f.rank();
  if (n <= 1) return Verdict::Anisotropic;
  if (n == 2) {
    int minus_ab = -f.entries[0].unit * f.entries[1].unit;
    return (minus_ab == 1 || minus_ab == 4) ? Verdict::Isotropic : Verdict::Anisotropic;
  }
  bool pos = false, neg = false;
  for (const auto& e : f.entries) (e.unit > 0 ? pos : neg) = true;
  if (!(pos && neg)) return Verdict::Anisotropic;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (f.entries[i].unit == -f.entries[j].unit) return Verdict::Isotropic;
  return Verdict::Unsupported;
}

}  // namespace detail

/// Springer recursion over Q((u_1))...((u_s)), outermost variable first.
inline Verdict is_anisotropic(const DiagonalForm& f) {
  VarMask all = 0;
  for (const auto& e : f.entries) all |= e.vars;
  if (all == 0) return detail::rational_verdict(f);
  int label = 0;
  for (VarMask m = all; m; m >>= 1) ++label;
  auto parts = springer_split(f, label);
  Verdict a = is_anisotropic(parts.unit);
  Verdict b = is_anisotropic(parts.uniformizer);
  if (a == Verdict::Isotropic || b == Verdict::Isotropic) return Verdict::Isotropic;
  if (a == Verdict::Unsupported || b == Verdict::Unsupported) return Verdict::Unsupported;
  return Verdict::Anisotropic;
}

}  // namespace gwfloor
