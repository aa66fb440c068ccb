#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gwfloor/floor_diagrams.hpp"
#include "gwfloor/gw_rings.hpp"

namespace gwfloor {

inline TildeElement delta_count(int d, const MergeConfiguration& from, const MergeConfiguration& to,
                                std::size_t budget = 0) {
  if (from.pairs() != to.pairs()) throw std::invalid_argument("delta_count: configurations differ in s");
  return floor_count(d, from, budget) - floor_count(d, to, budget);
}

/// (<1> - <2>) prod_l (<1> - x_l)
inline TildeElement pfister_element(int s) {
  auto r = TildeElement::constant(UnivElement::unit() - UnivElement::sym2(), s);
  for (int l = 1; l <= s; ++l) r *= TildeElement::one(s) - TildeElement::var(l, s);
  return r;
}

struct UniversalExtraction {
  UnivElement c_tilde;
  Cascade cascade;
};

/// Top coefficient of dN plus the cascade witnesses in the proof order.
inline UniversalExtraction extract_universal_coefficient(const TildeElement& delta,
                                                         const std::vector<int>& order) {
  auto c = cascade_decompose(delta, order);
  return {delta.top_coefficient(), c};
}

inline UniversalExtraction extract_universal_coefficient(const TildeElement& delta) {
  return extract_universal_coefficient(delta, proof_order(delta.num_vars()));
}

struct SweepEntry {
  FieldModel model;
  Assignment assign;
};

/// Real with every sign pattern, F_q (q in {5,7,11,13}) with every
/// square-class pattern, and the closed-field rank.
inline std::vector<SweepEntry> default_sweep(int s, const std::vector<std::int64_t>& primes = {5, 7, 11, 13}) {
  std::vector<SweepEntry> out;
  for (auto& a : all_assignments(s)) out.push_back({RealField{}, a});
  for (auto q : primes)
    for (auto& a : all_assignments(s)) out.push_back({FiniteField(q), a});
  out.push_back({ClosedField{}, Assignment(static_cast<std::size_t>(s), 0)});
  return out;
}

struct FieldCheck {
  std::string model;
  std::string assign;
  bool ok = false;
};

struct WallCrossReport {
  int d = 0;
  int s = 0;
  MergeConfiguration from;
  MergeConfiguration to;
  TildeElement delta;
  UniversalExtraction extraction;
  UnivCoords coords;
  bool reconstruction = false;
  bool rank_zero = false;
  bool broccoli = false;          // n1 + n2 = 0
  bool parity = false;            // n1 even
  bool signature_identity = false;  // sgn C = n1 + n2, sgn prod(x-1) = (-2)^s
  bool witnesses_zero = false;    // every cascade summand vanishes in the sweep
  bool witness_terms_zero = false;  // the bare S_q vanish as well (stronger, informational)
  std::vector<FieldCheck> field_zero;

  [[nodiscard]] bool fields_ok() const {
    for (const auto& f : field_zero)
      if (!f.ok) return false;
    return true;
  }
  [[nodiscard]] bool passed() const {
    return reconstruction && rank_zero && broccoli && parity && signature_identity && witnesses_zero && fields_ok();
  }
};

inline WallCrossReport wallcross_report(int d, const MergeConfiguration& from, const MergeConfiguration& to,
                                        const std::vector<SweepEntry>& sweep, std::size_t budget = 0) {
  WallCrossReport r;
  r.d = d;
  r.s = from.pairs();
  r.from = from;
  r.to = to;
  r.delta = delta_count(d, from, to, budget);
  r.extraction = extract_universal_coefficient(r.delta);
  r.coords = univ_coords(r.extraction.c_tilde);
  r.reconstruction = cascade_reconstruct(r.extraction.cascade, r.s) == r.delta &&
                     r.extraction.cascade.a_full == r.extraction.c_tilde;
  r.rank_zero = r.delta.rank() == CheckedInt{0};
  r.broccoli = r.coords.n1 + r.coords.n2 == 0;
  r.parity = r.coords.n1 % 2 == 0;

  const auto prod = shifted_product<CheckedInt>(proof_order(r.s), r.s);
  const Assignment negative(static_cast<std::size_t>(r.s), 1);
  std::int64_t expect = 1;
  for (int l = 0; l < r.s; ++l) expect *= -2;
  r.signature_identity =
      specialize_univ(r.extraction.c_tilde, RealField{}).signature == CheckedInt{r.coords.n1 + r.coords.n2} &&
      specialize_field(prod, RealField{}, negative).signature == CheckedInt{expect};

  std::vector<TildeElement> summands;
  for (std::size_t q = 0; q < r.extraction.cascade.terms.size(); ++q)
    summands.push_back(cascade_summand(r.extraction.cascade, q, r.s));

  r.witnesses_zero = true;
  r.witness_terms_zero = true;
  for (const auto& e : sweep) {
    r.field_zero.push_back({model_name(e.model), assignment_string(e.model, e.assign),
                            specialize_field(r.delta, e.model, e.assign).is_zero()});
    for (const auto& w : summands)
      if (!specialize_field(w, e.model, e.assign).is_zero()) r.witnesses_zero = false;
    for (const auto& w : r.extraction.cascade.terms)
      if (!specialize_field(w, e.model, e.assign).is_zero()) r.witness_terms_zero = false;
  }
  return r;
}

inline WallCrossReport wallcross_report(int d, const MergeConfiguration& from, const MergeConfiguration& to) {
  return wallcross_report(d, from, to, default_sweep(from.pairs()));
}

struct TransferCheck {
  int dissolved = 0;           // pair label dissolved
  MergeConfiguration from;     // dissolved source
  MergeConfiguration to;       // dissolved target
  int n2_target = 0;           // n2^{(s-1)} mod 2 of the dissolved shift
  bool ok = false;             // both sides zero mod 2
};

struct ResidualReport {
  int d = 0;
  int s = 0;
  MergeConfiguration from;
  MergeConfiguration to;
  ResidualTilde image;
  ResidualElement top;          // (n1 mod 2, n2 mod 2)
  bool paths_agree = false;     // reduce-then-extract = extract-then-reduce
  bool base_case = true;        // s = 1: <1>-coordinate vanishes
  std::vector<TransferCheck> transfer;
  bool closure = false;         // base or transfer gives n1 = 0 mod 2

  [[nodiscard]] bool passed() const {
    if (!paths_agree || !closure) return false;
    if (!base_case) return false;
    for (const auto& t : transfer)
      if (!t.ok) return false;
    return true;
  }
};

inline ResidualReport residual_report(int d, const MergeConfiguration& from, const MergeConfiguration& to,
                                      std::size_t budget = 0) {
  ResidualReport r;
  r.d = d;
  r.s = from.pairs();
  r.from = from;
  r.to = to;
  const auto delta = delta_count(d, from, to, budget);
  r.image = residual_reduce(delta);
  r.top = r.image.top_coefficient();
  r.paths_agree = r.top == residual_reduce(delta.top_coefficient());
  if (r.s == 1) {
    r.base_case = !r.top.a;
    r.closure = r.base_case;
  } else if (r.s >= 2) {
    bool all = true;
    for (int j = 1; j <= r.s; ++j) {
      TransferCheck t;
      t.dissolved = j;
      t.from = dissolve(from, j);
      t.to = dissolve(to, j);
      if (t.from == t.to) {
        t.n2_target = 0;
      } else {
        auto top = residual_reduce(delta_count(d, t.from, t.to, budget).top_coefficient());
        t.n2_target = top.b ? 1 : 0;
      }
      t.ok = !r.top.a && t.n2_target == 0;
      all = all && t.ok;
      r.transfer.push_back(t);
    }
    r.closure = all && !r.top.a;
  } else {
    r.closure = r.image.is_zero();
  }
  return r;
}

}  // namespace gwfloor
