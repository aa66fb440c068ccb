#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "gwfloor/floor/diagram.hpp"
#include "gwfloor/floor/merge_config.hpp"
#include "gwfloor/local_factors.hpp"

namespace gwfloor {

enum class TagKind : std::uint8_t { TypeA, TypeR, Twin };

inline const char* tag_name(TagKind k) {
  switch (k) {
    case TagKind::TypeA: return "TypeA";
    case TagKind::TypeR: return "TypeR";
    case TagKind::Twin: return "Twin";
  }
  return "?";
}

/// Classification of one merged pair.  For TypeA, m is the weight of the
/// incident edge; for Twin, twin indexes MergedDiagram::twins.
struct PairTag {
  TagKind kind = TagKind::TypeR;
  int label = 1;
  ObjectRef lower;
  ObjectRef upper;
  std::int64_t m = 0;
  int twin = -1;
  friend bool operator==(const PairTag&, const PairTag&) = default;
};

struct MergedDiagram {
  MarkedDiagram marked;
  MergeConfiguration cfg;
  std::vector<PairTag> tags;
  std::vector<TwinTreeDescriptor> twins;
  std::vector<bool> absorbed;  // per elevator: consumed by a TypeA or Twin tag
};

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnsupportedShape : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

/// Exchange the objects at 0-based positions i and i+1.  Two floors trade
/// their labels so that floor marks stay in height order.
inline void swap_adjacent(FloorDiagram& D, std::vector<ObjectRef>& mk, std::size_t i) {
  std::swap(mk[i], mk[i + 1]);
  if (mk[i].kind != ObjKind::Floor || mk[i + 1].kind != ObjKind::Floor) return;
  const int a = mk[i].index, b = mk[i + 1].index;
  auto relabel = [&](int f) { return f == a ? b : (f == b ? a : f); };
  for (auto& e : D.elevators) {
    int x = relabel(e.lo), y = relabel(e.hi);
    e.lo = std::min(x, y);
    e.hi = std::max(x, y);
  }
  std::swap(D.ends[static_cast<std::size_t>(a)], D.ends[static_cast<std::size_t>(b)]);
  for (auto& o : mk)
    if (o.kind != ObjKind::Elevator) o.index = relabel(o.index);
}

struct RawClass {
  bool type_a = false;
  std::int64_t m = 0;
  ObjectRef edge;
};

inline RawClass classify_pair(const FloorDiagram& D, const ObjectRef& a, const ObjectRef& b) {
  if (a.kind != ObjKind::Floor && b.kind != ObjKind::Floor) return {};
  if (a.kind == ObjKind::Floor && b.kind == ObjKind::Floor) return {};
  const ObjectRef& f = a.kind == ObjKind::Floor ? a : b;
  const ObjectRef& e = a.kind == ObjKind::Floor ? b : a;
  if (e.kind == ObjKind::End) {
    if (e.index == f.index) return {true, 1, e};
    return {};
  }
  const auto& el = D.elevators[static_cast<std::size_t>(e.index)];
  if (el.lo == f.index || el.hi == f.index) return {true, el.w, e};
  return {};
}

}  // namespace detail

/// Classifies one marked diagram under cfg.  Returns false when the marking is
/// not the canonical representative of its orbit under the free pair swaps.
inline bool classify_merged(const MarkedDiagram& M, const MergeConfiguration& cfg, MergedDiagram& out) {
  const auto& D = M.diagram;
  const int s = cfg.pairs();
  out = MergedDiagram{M, cfg, std::vector<PairTag>(static_cast<std::size_t>(s)), {},
                      std::vector<bool>(D.elevators.size(), false)};

  std::vector<int> swappable;  // pair indices, 0-based
  for (int j = 0; j < s; ++j) {
    const auto p = static_cast<std::size_t>(cfg.positions[static_cast<std::size_t>(j)] - 1);
    auto& tag = out.tags[static_cast<std::size_t>(j)];
    tag.label = j + 1;
    tag.lower = M.marking[p];
    tag.upper = M.marking[p + 1];
    auto rc = detail::classify_pair(D, tag.lower, tag.upper);
    if (rc.type_a) {
      tag.kind = TagKind::TypeA;
      tag.m = rc.m;
      if (rc.edge.kind == ObjKind::Elevator) out.absorbed[static_cast<std::size_t>(rc.edge.index)] = true;
    } else {
      swappable.push_back(j);
    }
  }

  const std::size_t k = swappable.size();
  const auto own = encode(D, M.marking);
  std::vector<std::uint32_t> stab;
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    FloorDiagram D2 = D;
    auto mk = M.marking;
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1u)
        detail::swap_adjacent(D2, mk, static_cast<std::size_t>(cfg.positions[static_cast<std::size_t>(swappable[i])] - 1));
    auto enc = encode(D2, mk);
    if (enc < own) return false;
    if (enc == own) stab.push_back(mask);
  }

  // Pairs whose own swap fixes the marking are identical same-floor ends.
  std::uint32_t self_mask = 0;
  for (auto m : stab)
    if (std::has_single_bit(m)) self_mask |= m;
  std::set<std::uint32_t> reduced;
  for (auto m : stab)
    if ((m & ~self_mask) != 0) reduced.insert(m & ~self_mask);
  std::vector<int> parent(k);
  for (std::size_t i = 0; i < k; ++i) parent[i] = static_cast<int>(i);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  for (auto r : reduced) {
    bool minimal = std::none_of(reduced.begin(), reduced.end(), [&](std::uint32_t o) { return o != r && (o & r) == o; });
    if (!minimal) continue;
    int first = -1;
    for (std::size_t i = 0; i < k; ++i) {
      if (!(r >> i & 1u)) continue;
      if (first < 0) first = static_cast<int>(i);
      else parent[static_cast<std::size_t>(find(static_cast<int>(i)))] = find(first);
    }
  }

  std::map<int, std::vector<std::size_t>> comps;
  for (std::size_t i = 0; i < k; ++i) {
    if (self_mask >> i & 1u) {
      auto& tag = out.tags[static_cast<std::size_t>(swappable[i])];
      tag.kind = TagKind::Twin;
      tag.twin = static_cast<int>(out.twins.size());
      out.twins.push_back({1, 2, {}, {tag.label}});
      continue;
    }
    comps[find(static_cast<int>(i))].push_back(i);
  }

  for (auto& [root_idx, members] : comps) {
    if (members.size() == 1) {
      out.tags[static_cast<std::size_t>(swappable[members[0]])].kind = TagKind::TypeR;
      continue;
    }
    TwinTreeDescriptor desc;
    desc.t = static_cast<int>(members.size());
    std::int64_t doubled_ends = 0;
    std::int64_t root_weight = -1;
    const int twin_index = static_cast<int>(out.twins.size());
    for (auto i : members) {
      auto& tag = out.tags[static_cast<std::size_t>(swappable[i])];
      tag.kind = TagKind::Twin;
      tag.twin = twin_index;
      desc.labels.push_back(tag.label);
      if (tag.lower.kind == ObjKind::End && tag.upper.kind == ObjKind::End) ++doubled_ends;
      if (tag.lower.kind == ObjKind::Elevator && tag.upper.kind == ObjKind::Elevator) {
        const auto& ea = D.elevators[static_cast<std::size_t>(tag.lower.index)];
        const auto& eb = D.elevators[static_cast<std::size_t>(tag.upper.index)];
        out.absorbed[static_cast<std::size_t>(tag.lower.index)] = true;
        out.absorbed[static_cast<std::size_t>(tag.upper.index)] = true;
        desc.edges.push_back({ea.w, tag.label});
        if (ea.lo == eb.lo || ea.lo == eb.hi || ea.hi == eb.lo || ea.hi == eb.hi) root_weight = ea.w;
      }
    }
    if (root_weight < 0) throw UnsupportedShape("coupled pairs without a root elevator in " + to_string(cfg));
    desc.m_circ = root_weight + doubled_ends;
    std::sort(desc.labels.begin(), desc.labels.end());
    out.twins.push_back(desc);
  }
  return true;
}

/// All classified merged diagrams of degree d under cfg.  budget caps the
/// number of marked diagrams examined (0 = no cap).
inline std::vector<MergedDiagram> enumerate_merged_diagrams(int d, const MergeConfiguration& cfg,
                                                            std::size_t budget = 0) {
  if (cfg.n != marked_points(d) || !is_valid(cfg)) throw std::invalid_argument("configuration does not fit the degree");
  const auto& all = enumerate_diagrams(d);
  if (budget != 0 && all.size() > budget) throw BudgetExceeded("enumeration exceeds the budget");
  std::vector<MergedDiagram> out;
  MergedDiagram md;
  for (const auto& M : all)
    if (classify_merged(M, cfg, md)) out.push_back(md);
  return out;
}

/// Local factors of a classified diagram, one per tag group and elevator.
inline std::vector<LocalFactor> local_factors(const MergedDiagram& md) {
  std::vector<LocalFactor> out;
  std::vector<bool> twin_done(md.twins.size(), false);
  for (const auto& tag : md.tags) {
    switch (tag.kind) {
      case TagKind::TypeA: out.push_back(TypeA{tag.m, tag.label}); break;
      case TagKind::TypeR: out.push_back(TypeR{tag.label}); break;
      case TagKind::Twin:
        if (tag.twin < 0 || static_cast<std::size_t>(tag.twin) >= md.twins.size())
          throw std::invalid_argument("inconsistent twin tag");
        if (!twin_done[static_cast<std::size_t>(tag.twin)]) {
          twin_done[static_cast<std::size_t>(tag.twin)] = true;
          out.push_back(TwinTree{md.twins[static_cast<std::size_t>(tag.twin)]});
        }
        break;
    }
  }
  const auto& els = md.marked.diagram.elevators;
  for (std::size_t k = 0; k < els.size(); ++k)
    if (!md.absorbed[k]) out.push_back(ElevatorSquare{els[k].w});
  return out;
}

inline TildeElement diagram_multiplicity(const MergedDiagram& md, int s) {
  if (md.cfg.pairs() != s) throw std::invalid_argument("diagram_multiplicity: s does not match the configuration");
  auto r = TildeElement::one(s);
  for (const auto& f : local_factors(md)) r *= evaluate(f, s);
  return r;
}

inline TildeElement floor_count(int d, const MergeConfiguration& cfg, std::size_t budget = 0) {
  const int s = cfg.pairs();
  TildeElement total(s);
  for (const auto& md : enumerate_merged_diagrams(d, cfg, budget)) total += diagram_multiplicity(md, s);
  return total;
}

/// x_j -> 1 followed by relabelling x_{j+1..s} -> x_{j..s-1}.
inline TildeElement dissolve_specialize(const TildeElement& count, int j) { return count.dissolve(j); }

}  // namespace gwfloor
