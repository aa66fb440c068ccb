#pragma once

#include <bit>
#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gwfloor/floor_diagrams.hpp"
#include "gwfloor/gw_rings.hpp"
#include "gwfloor/local_factors.hpp"
#include "gwfloor/parallel.hpp"
#include "gwfloor/wallcross.hpp"
#include "gwfloor/witt_springer.hpp"

namespace gwfloor {

struct CheckResult {
  std::string id;
  bool pass = false;
  double elapsed_ms = 0.0;
  std::string detail;
};

struct SuiteResult {
  std::string name;
  std::vector<CheckResult> checks;
  bool pass = false;

  [[nodiscard]] const CheckResult* first_failure() const {
    for (const auto& c : checks)
      if (!c.pass) return &c;
    return nullptr;
  }
};

struct NamedCheck {
  std::string id;
  std::function<std::pair<bool, std::string>()> run;
};

struct SuiteOptions {
  unsigned jobs = 1;
  std::size_t budget = 0;
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"identities", "laws",     "counts",   "anchors",     "dissolution",
                                                 "wallcross",  "residual", "springer", "connectivity"};
  return names;
}

namespace suites {

using Checks = std::vector<NamedCheck>;

inline std::pair<bool, std::string> verdict(bool ok, std::string detail = {}) { return {ok, std::move(detail)}; }

/// Lift a GW~ element into the carrier, x_l -> <vars[l-1]>.
inline HypUnivElement lift(const TildeElement& t, const std::vector<SquareClassMonomial>& vars) {
  HypUnivElement r;
  for (const auto& [m, c] : t.terms()) {
    SquareClassMonomial mono{};
    for (int l : mask_labels(m)) mono = mono * vars[static_cast<std::size_t>(l - 1)];
    r = r + HypUnivElement::symbol(mono) * HypUnivElement::from_univ(c);
  }
  return r;
}

inline Checks identities() {
  Checks out;
  auto G = std::make_shared<SquareClassGroup>(SquareClassGroup::with_primes_up_to(60, {"m", "d"}));
  for (std::int64_t m = 1; m <= 60; ++m) {
    out.push_back({"type_a_product/m=" + std::to_string(m), [G, m] {
                     const auto d = G->formal("d");
                     auto raw = gamma_hat_raw(m, G->formal("m"), d, *G) * m_a1_raw(m, G->formal("m"));
                     auto grouped = lift(type_a_factor(m, 1, 1), {d});
                     return verdict(raw == grouped, raw.to_string(*G) + " vs " + grouped.to_string(*G));
                   }});
  }
  for (std::int64_t m = 1; m <= 60; ++m) {
    out.push_back({"square_field/m=" + std::to_string(m), [G, m] {
                     auto lhs = gamma_hat_raw(m, SquareClassMonomial{}, *G);
                     auto rhs = m_a1_raw(m, *G);
                     return verdict(lhs == rhs, lhs.to_string(*G) + " vs " + rhs.to_string(*G));
                   }});
  }
  for (std::int64_t m = 1; m <= 60; ++m) {
    out.push_back({"elevator_square/m=" + std::to_string(m), [G, m] {
                     auto a1 = m_a1_raw(m, *G);
                     auto sq = a1 * a1;
                     return verdict(sq == HypUnivElement::from_univ(elevator_square(m)), sq.to_string(*G));
                   }});
  }
  for (std::int64_t m = 1; m <= 60; ++m) {
    out.push_back({"universal_square_field/m=" + std::to_string(m), [G, m] {
                     auto prod = gamma_hat_raw(m, SquareClassMonomial{}, *G) * m_a1_raw(m, *G);
                     auto u = prod.to_univ();
                     return verdict(u && *u == elevator_square(m), prod.to_string(*G));
                   }});
  }
  return out;
}

inline Checks laws() {
  Checks out;
  const std::vector<FieldModel> models = {RealField{},     ClosedField{},    FiniteField(5), FiniteField(7),
                                          FiniteField(11), FiniteField(13), FiniteField(17)};
  for (const auto& model : models) {
    const std::string name = model_name(model);
    const FieldValue one = symbol_value(model, false, false, 0);
    const FieldValue h = hyperbolic_value(model);
    out.push_back({name + "/h_squared", [=] { return verdict(field_mul(h, h) == field_scale(2, h)); }});
    for (int a = 0; a < 2; ++a) {
      const FieldValue sa = symbol_value(model, false, false, a);
      const FieldValue s2a = symbol_value(model, false, true, a);
      const std::string tag = "/a=" + assignment_string(model, {a});
      out.push_back({name + "/h_absorbs" + tag, [=] { return verdict(field_mul(h, sa) == h); }});
      out.push_back({name + "/h_kills_augmentation/d=" + assignment_string(model, {a}),
                     [=] { return verdict(field_mul(h, field_sub(sa, one)).is_zero()); }});
      if (std::holds_alternative<FiniteField>(model))
        out.push_back({name + "/two_torsion" + tag,
                       [=] { return verdict(field_scale(2, field_sub(sa, s2a)).is_zero()); }});
    }
    if (!std::holds_alternative<FiniteField>(model)) continue;
    const auto& ff = std::get<FiniteField>(model);
    for (int s = 0; s <= 3; ++s) {
      out.push_back({name + "/pfister_two_torsion/s=" + std::to_string(s), [=] {
                       auto pf = pfister_element(s);
                       for (const auto& a : all_assignments(s))
                         if (!field_scale(2, specialize_field(pf, model, a)).is_zero())
                           return verdict(false, assignment_string(model, a));
                       return verdict(true);
                     }});
      if (!ff.two_nonsquare())
        out.push_back({name + "/pfister_vanishes_with_sqrt2/s=" + std::to_string(s), [=] {
                         auto pf = pfister_element(s);
                         for (const auto& a : all_assignments(s))
                           if (!specialize_field(pf, model, a).is_zero())
                             return verdict(false, assignment_string(model, a));
                         return verdict(true);
                       }});
    }
  }
  return out;
}

inline std::string cfg_id(int d, const MergeConfiguration& c) {
  return "d=" + std::to_string(d) + "/s=" + std::to_string(c.pairs()) + "/" + to_string(c);
}

inline Checks counts(std::size_t budget) {
  Checks out;
  out.push_back({"kontsevich/values", [] {
                   bool ok = kontsevich_nd(1) == CheckedInt{1} && kontsevich_nd(2) == CheckedInt{1} &&
                             kontsevich_nd(3) == CheckedInt{12} && kontsevich_nd(4) == CheckedInt{620};
                   return verdict(ok);
                 }});
  for (int d = 1; d <= 4; ++d) {
    out.push_back({"unmerged_weight_sum/d=" + std::to_string(d), [d] {
                     CheckedInt total{0};
                     for (const auto& M : enumerate_diagrams(d)) {
                       CheckedInt prod{1};
                       for (const auto& e : M.diagram.elevators) prod *= CheckedInt{e.w} * CheckedInt{e.w};
                       total += prod;
                     }
                     return verdict(total == kontsevich_nd(d), std::to_string(total.value()));
                   }});
  }
  for (int d = 1; d <= 4; ++d) {
    const int n = marked_points(d);
    for (int s = 0; 2 * s <= n; ++s)
      for (const auto& c : enumerate_merge_configs(n, s))
        out.push_back({"rank/" + cfg_id(d, c), [d, c, budget] {
                         auto r = floor_count(d, c, budget).rank();
                         return verdict(r == kontsevich_nd(d), std::to_string(r.value()));
                       }});
  }
  out.push_back({"enriched/d=3/s=0", [budget] {
                   auto t = floor_count(3, {8, {}}, budget);
                   auto expect = TildeElement::constant({8, 2, 0}, 0);
                   auto v = specialize_field(t, RealField{}, {});
                   return verdict(t == expect && v.rank == CheckedInt{12} && v.signature == CheckedInt{8}, to_string(t));
                 }});
  for (int d = 1; d <= 4; ++d) {
    const int n = marked_points(d);
    for (int s = 0; 2 * s <= n; ++s) {
      out.push_back({"signature_invariance/d=" + std::to_string(d) + "/s=" + std::to_string(s), [d, n, s, budget] {
                       std::set<std::int64_t> sigs;
                       for (const auto& c : enumerate_merge_configs(n, s))
                         sigs.insert(specialize_field(floor_count(d, c, budget), RealField{},
                                                      Assignment(static_cast<std::size_t>(s), 1))
                                         .signature.value());
                       std::string detail;
                       for (auto v : sigs) detail += std::to_string(v) + " ";
                       bool ok = sigs.size() == 1;
                       if (d == 3 && s == 0) ok = ok && *sigs.begin() == 8;
                       return verdict(ok, detail);
                     }});
      out.push_back({"field_invariance/d=" + std::to_string(d) + "/s=" + std::to_string(s), [d, n, s, budget] {
                       std::vector<TildeElement> all;
                       for (const auto& c : enumerate_merge_configs(n, s)) all.push_back(floor_count(d, c, budget));
                       for (const auto& entry : default_sweep(s))
                         for (std::size_t i = 1; i < all.size(); ++i)
                           if (specialize_field(all[i], entry.model, entry.assign) !=
                               specialize_field(all[0], entry.model, entry.assign))
                             return verdict(false, model_name(entry.model) + " " +
                                                       assignment_string(entry.model, entry.assign));
                       return verdict(true);
                     }});
    }
  }
  for (int d = 2; d <= 4; ++d) {
    out.push_back({"even_elevator_signature/d=" + std::to_string(d), [d, budget] {
                     const int n = marked_points(d);
                     for (int s = 0; 2 * s <= n; ++s)
                       for (const auto& c : enumerate_merge_configs(n, s))
                         for (const auto& md : enumerate_merged_diagrams(d, c, budget)) {
                           bool even = false;
                           const auto& els = md.marked.diagram.elevators;
                           for (std::size_t k = 0; k < els.size(); ++k) {
                             bool twin = false;
                             for (const auto& t : md.tags)
                               if (t.kind == TagKind::Twin &&
                                   ((t.lower.kind == ObjKind::Elevator && t.lower.index == static_cast<int>(k)) ||
                                    (t.upper.kind == ObjKind::Elevator && t.upper.index == static_cast<int>(k))))
                                 twin = true;
                             if (!twin && els[k].w % 2 == 0) even = true;
                           }
                           if (!even) continue;
                           auto v = specialize_field(diagram_multiplicity(md, s), RealField{},
                                                     Assignment(static_cast<std::size_t>(s), 1));
                           if (v.signature != CheckedInt{0}) return verdict(false, cfg_id(d, c));
                         }
                     return verdict(true);
                   }});
  }
  return out;
}

inline Checks anchors() {
  Checks out;
  using U = UnivElement;
  out.push_back({"type_a_m3", [] {
                   auto expect = TildeElement::constant({1, 3, 1}, 2) +
                                 TildeElement::monomial(var_bit(2), U::sym_minus2(), 2);
                   return verdict(type_a_factor(3, 2, 2) == expect, to_string(type_a_factor(3, 2, 2)));
                 }});
  out.push_back({"twin_T1", [] {
                   return verdict(twin_tree_factor({1, 2, {}, {1}}, 1) == TildeElement::one(1));
                 }});
  out.push_back({"twin_T2", [] {
                   auto expect = TildeElement::monomial(var_bit(1), U::sym2(), 2) +
                                 TildeElement::monomial(var_bit(2), U::sym2(), 2);
                   return verdict(twin_tree_factor({2, 1, {}, {1, 2}}, 2) == expect);
                 }});
  out.push_back({"twin_T3", [] {
                   const int s = 7;
                   auto edge = CheckedInt{2} * (TildeElement::one(s) + TildeElement::monomial(var_bit(1), U::sym_minus1(), s)) +
                               TildeElement::constant({0, 6, 0}, s);
                   TildeElement odd(s);
                   for (VarMask m = 0; m < (1u << s); ++m)
                     if (std::popcount(m) % 2 == 1) odd.add_term(m, U::unit());  // <2^6> = <1>
                   auto got = twin_tree_factor({7, 3, {{2, 1}}, {1, 2, 3, 4, 5, 6, 7}}, s);
                   return verdict(got == edge * odd && got.rank() == CheckedInt{64 * 16});
                 }});
  out.push_back({"quartic_example_product", [] {
                   const int s = 5;
                   auto twin = twin_tree_factor({2, 1, {}, {1, 2}}, s);
                   auto got = twin * type_r_factor(4, s);
                   auto a = TildeElement::monomial(var_bit(1), U::sym2(), s) + TildeElement::monomial(var_bit(2), U::sym2(), s);
                   auto b = TildeElement::constant(U::sym2(), s) + TildeElement::monomial(var_bit(4), U::sym2(), s);
                   return verdict(got == a * b, to_string(got));
                 }});
  out.push_back({"d2_type_a_at_4", [] {
                   auto mds = enumerate_merged_diagrams(2, {5, {4}});
                   for (const auto& md : mds)
                     if (md.tags[0].kind == TagKind::TypeA && md.tags[0].m == 1 &&
                         md.tags[0].lower.kind == ObjKind::Elevator && md.tags[0].upper.kind == ObjKind::Floor)
                       return verdict(true);
                   return verdict(false);
                 }});
  out.push_back({"d3_single_twin", [] {
                   for (const auto& md : enumerate_merged_diagrams(3, {8, {1}})) {
                     if (md.marked.diagram.ends[0] != 3) continue;
                     if (md.tags[0].kind == TagKind::Twin && md.twins[0] == TwinTreeDescriptor{1, 2, {}, {1}} &&
                         diagram_multiplicity(md, 1) == TildeElement::constant(elevator_square(1), 1))
                       return verdict(true);
                   }
                   return verdict(false);
                 }});
  out.push_back({"dissolve_type_r", [] {
                   auto dis = type_r_factor(1, 1).dissolve(1);
                   bool ok = dis == TildeElement::constant(CheckedInt{2} * U::sym2(), 0);
                   for (std::int64_t q : {5, 7, 11, 13})
                     ok = ok && specialize_field(dis, FiniteField(q), {}) ==
                                    specialize_field(TildeElement::constant({2, 0, 0}, 0), FiniteField(q), {});
                   return verdict(ok);
                 }});
  out.push_back({"dissolve_type_a", [] {
                   for (std::int64_t m = 1; m <= 60; ++m)
                     if (type_a_factor(m, 1, 1).dissolve(1) != TildeElement::constant(elevator_square(m), 0))
                       return verdict(false, "m=" + std::to_string(m));
                   return verdict(true);
                 }});
  return out;
}

inline Checks dissolution(std::size_t budget) {
  Checks out;
  for (int d = 1; d <= 3; ++d) {
    const int n = marked_points(d);
    for (int s = 1; 2 * s <= n; ++s)
      for (const auto& c : enumerate_merge_configs(n, s))
        for (int j = 1; j <= s; ++j)
          out.push_back({cfg_id(d, c) + "/j=" + std::to_string(j), [d, c, j, s, budget] {
                           auto lhs = dissolve_specialize(floor_count(d, c, budget), j);
                           auto rhs = floor_count(d, dissolve(c, j), budget);
                           for (std::int64_t q : {5, 7, 11})
                             for (const auto& a : all_assignments(s - 1))
                               if (specialize_field(lhs, FiniteField(q), a) != specialize_field(rhs, FiniteField(q), a))
                                 return verdict(false, "q=" + std::to_string(q));
                           return verdict(true);
                         }});
  }
  return out;
}

inline Checks wallcross(std::size_t budget) {
  Checks out;
  for (int d = 2; d <= 4; ++d) {
    const int n = marked_points(d);
    for (int s = 1; 2 * s <= n; ++s)
      for (const auto& [a, b] : unit_shifts(n, s))
        out.push_back({cfg_id(d, a) + "->" + to_string(b), [d, a, b, budget] {
                         auto r = wallcross_report(d, a, b, default_sweep(a.pairs()), budget);
                         std::string detail = "n1=" + std::to_string(r.coords.n1) + " n2=" +
                                              std::to_string(r.coords.n2) + " m=" + std::to_string(r.coords.m);
                         return verdict(r.passed(), detail);
                       }});
  }
  return out;
}

inline Checks residual(std::size_t budget) {
  Checks out;
  auto two_paths = [](const LocalFactor& f, int s) {
    return residual_factor(f, s) == residual_reduce(evaluate(f, s));
  };
  for (std::int64_t m = 1; m <= 40; ++m) {
    out.push_back({"table/m=" + std::to_string(m), [m, two_paths] {
                     bool ok = two_paths(ElevatorSquare{m}, 1) && two_paths(TypeA{m, 1}, 1) &&
                               two_paths(TwinEdge{m, 1}, 1) && two_paths(TypeR{1}, 1) && two_paths(UnitEnd{}, 1);
                     for (int t = 1; t <= 4; ++t) {
                       std::vector<int> labels(static_cast<std::size_t>(t));
                       for (int i = 0; i < t; ++i) labels[static_cast<std::size_t>(i)] = i + 1;
                       ok = ok && two_paths(TwinTree{{t, m, {{m, 1}}, labels}}, 4) &&
                            two_paths(TwinTree{{t, m + 1, {}, labels}}, 4);
                     }
                     return verdict(ok);
                   }});
  }
  for (int d = 2; d <= 3; ++d) {
    const int n = marked_points(d);
    for (int s = 0; 2 * s <= n; ++s)
      for (const auto& c : enumerate_merge_configs(n, s))
        out.push_back({"diagram_factors/" + cfg_id(d, c), [d, c, s, budget] {
                         for (const auto& md : enumerate_merged_diagrams(d, c, budget)) {
                           ResidualTilde prod = ResidualTilde::constant(ResidualElement::one(), s);
                           for (const auto& f : local_factors(md)) prod = prod * residual_factor(f, s);
                           if (prod != residual_reduce(diagram_multiplicity(md, s))) return verdict(false);
                         }
                         return verdict(true);
                       }});
    for (int s = 1; 2 * s <= n; ++s)
      for (const auto& [a, b] : unit_shifts(n, s))
        out.push_back({"shift/" + cfg_id(d, a) + "->" + to_string(b), [d, a, b, budget] {
                         auto r = residual_report(d, a, b, budget);
                         return verdict(r.passed(), "top=" + to_string(r.top));
                       }});
  }
  return out;
}

inline Checks springer() {
  Checks out;
  for (int s = 1; s <= 8; ++s)
    out.push_back({"pfister_anisotropic/s=" + std::to_string(s), [s] {
                     auto f = pfister_concrete(s);
                     return verdict(f.rank() == (std::size_t{2} << s) && is_anisotropic(f) == Verdict::Anisotropic);
                   }});
  out.push_back({"hyperbolic_plane", [] {
                   return verdict(is_anisotropic(DiagonalForm{{{1, 0}, {-1, 0}}}) == Verdict::Isotropic);
                 }});
  out.push_back({"one_minus_two", [] {
                   return verdict(is_anisotropic(DiagonalForm{{{1, 0}, {-2, 0}}}) == Verdict::Anisotropic);
                 }});
  for (int i = 1; i <= 8; ++i)
    out.push_back({"residue_forms/i=" + std::to_string(i), [i] {
                     auto parts = springer_split(pfister_concrete(i), i);
                     auto prev = pfister_concrete(i - 1);
                     return verdict(parts.unit == prev && parts.uniformizer == prev.scaled({-1, 0}));
                   }});
  return out;
}

inline Checks connectivity() {
  Checks out;
  for (int n = 1; n <= 12; ++n)
    for (int s = 0; 2 * s <= n; ++s)
      out.push_back({"n=" + std::to_string(n) + "/s=" + std::to_string(s), [n, s] {
                       auto configs = enumerate_merge_configs(n, s);
                       return verdict(!configs.empty() && is_connected(unit_shift_graph(configs)),
                                      std::to_string(configs.size()) + " configs");
                     }});
  return out;
}

inline Checks for_name(const std::string& name, const SuiteOptions& opt) {
  if (name == "identities") return identities();
  if (name == "laws") return laws();
  if (name == "counts") return counts(opt.budget);
  if (name == "anchors") return anchors();
  if (name == "dissolution") return dissolution(opt.budget);
  if (name == "wallcross") return wallcross(opt.budget);
  if (name == "residual") return residual(opt.budget);
  if (name == "springer") return springer();
  if (name == "connectivity") return connectivity();
  if (name == "all") {
    Checks all;
    for (const auto& n : suite_names())
      for (auto& c : for_name(n, opt)) all.push_back({n + "/" + c.id, std::move(c.run)});
    return all;
  }
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace suites

inline SuiteResult run_suite(const std::string& name, const SuiteOptions& opt = {}) {
  auto checks = suites::for_name(name, opt);
  SuiteResult r;
  r.name = name;
  r.checks = parallel_map<CheckResult>(checks.size(), opt.jobs, [&](std::size_t i) {
    CheckResult c;
    c.id = checks[i].id;
    auto t0 = std::chrono::steady_clock::now();
    try {
      auto [ok, detail] = checks[i].run();
      c.pass = ok;
      c.detail = std::move(detail);
    } catch (const BudgetExceeded&) {
      throw;
    } catch (const std::exception& e) {
      c.pass = false;
      c.detail = std::string("exception: ") + e.what();
    }
    c.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return c;
  });
  r.pass = r.first_failure() == nullptr;
  return r;
}

}  // namespace gwfloor
