#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace gwfloor {

struct Elevator {
  int lo = 0;  // lower floor, 0-based
  int hi = 0;  // upper floor, 0-based
  std::int64_t w = 1;
  friend bool operator==(const Elevator&, const Elevator&) = default;
};

/// Genus-0 floor diagram of degree d for the plane triangle: d floors in height
/// order, d-1 bounded elevators forming a tree, d weight-one down ends.
struct FloorDiagram {
  int d = 1;
  std::vector<Elevator> elevators;
  std::vector<int> ends;  // down ends per floor

  friend bool operator==(const FloorDiagram&, const FloorDiagram&) = default;
};

enum class ObjKind : std::uint8_t { End = 0, Elevator = 1, Floor = 2 };

/// Floor i, elevator i, or a down end of floor i.
struct ObjectRef {
  ObjKind kind = ObjKind::Floor;
  int index = 0;
  friend bool operator==(const ObjectRef&, const ObjectRef&) = default;
};

struct MarkedDiagram {
  FloorDiagram diagram;
  std::vector<ObjectRef> marking;  // 3d-1 objects bottom to top
  friend bool operator==(const MarkedDiagram&, const MarkedDiagram&) = default;
};

inline int marked_points(int d) { return 3 * d - 1; }

/// Checks the tree, divergence and end-count conditions.
inline bool is_valid(const FloorDiagram& D) {
  if (D.d < 1 || static_cast<int>(D.ends.size()) != D.d) return false;
  if (static_cast<int>(D.elevators.size()) != D.d - 1) return false;
  std::vector<int> parent(static_cast<std::size_t>(D.d));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  std::vector<std::int64_t> out(static_cast<std::size_t>(D.d), 1), in(static_cast<std::size_t>(D.d), 0);
  for (const auto& e : D.elevators) {
    if (e.lo < 0 || e.hi >= D.d || e.lo >= e.hi || e.w < 1) return false;
    int a = find(e.lo), b = find(e.hi);
    if (a == b) return false;
    parent[static_cast<std::size_t>(a)] = b;
    out[static_cast<std::size_t>(e.lo)] += e.w;
    in[static_cast<std::size_t>(e.hi)] += e.w;
  }
  int total = 0;
  for (int f = 0; f < D.d; ++f) {
    auto i = static_cast<std::size_t>(f);
    if (D.ends[i] < 0 || out[i] != in[i] + D.ends[i]) return false;
    total += D.ends[i];
  }
  return total == D.d;
}

/// Checks the compatibility of a marking with its diagram.
inline bool is_valid(const MarkedDiagram& M) {
  const auto& D = M.diagram;
  if (!is_valid(D) || static_cast<int>(M.marking.size()) != marked_points(D.d)) return false;
  std::vector<int> floor_pos(static_cast<std::size_t>(D.d), -1), elev_pos(D.elevators.size(), -1);
  std::vector<int> ends_seen(static_cast<std::size_t>(D.d), 0);
  int next_floor = 0;
  for (int p = 0; p < static_cast<int>(M.marking.size()); ++p) {
    const auto& o = M.marking[static_cast<std::size_t>(p)];
    switch (o.kind) {
      case ObjKind::Floor:
        if (o.index != next_floor) return false;
        floor_pos[static_cast<std::size_t>(next_floor++)] = p;
        break;
      case ObjKind::Elevator:
        if (o.index < 0 || o.index >= static_cast<int>(D.elevators.size()) || elev_pos[static_cast<std::size_t>(o.index)] >= 0)
          return false;
        elev_pos[static_cast<std::size_t>(o.index)] = p;
        break;
      case ObjKind::End:
        if (o.index < 0 || o.index >= D.d || o.index < next_floor) return false;
        ++ends_seen[static_cast<std::size_t>(o.index)];
        break;
    }
  }
  if (ends_seen != D.ends) return false;
  for (std::size_t k = 0; k < D.elevators.size(); ++k) {
    const auto& e = D.elevators[k];
    if (!(floor_pos[static_cast<std::size_t>(e.lo)] < elev_pos[k] && elev_pos[k] < floor_pos[static_cast<std::size_t>(e.hi)]))
      return false;
  }
  return true;
}

namespace detail {

inline void spanning_trees(int d, std::vector<std::pair<int, int>>& pool, std::size_t from,
                           std::vector<std::pair<int, int>>& chosen, std::vector<std::vector<std::pair<int, int>>>& out) {
  if (static_cast<int>(chosen.size()) == d - 1) {
    std::vector<int> parent(static_cast<std::size_t>(d));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
      return x;
    };
    for (auto [a, b] : chosen) {
      int ra = find(a), rb = find(b);
      if (ra == rb) return;
      parent[static_cast<std::size_t>(ra)] = rb;
    }
    out.push_back(chosen);
    return;
  }
  for (std::size_t i = from; i < pool.size(); ++i) {
    chosen.push_back(pool[i]);
    spanning_trees(d, pool, i + 1, chosen, out);
    chosen.pop_back();
  }
}

struct MarkingBuilder {
  const FloorDiagram& D;
  std::vector<ObjectRef> seq;
  std::vector<int> ends_left;
  std::vector<bool> placed;
  std::vector<std::vector<ObjectRef>>* out;

  void run(int next_floor) {
    if (static_cast<int>(seq.size()) == marked_points(D.d)) {
      out->push_back(seq);
      return;
    }
    if (next_floor < D.d && ends_left[static_cast<std::size_t>(next_floor)] == 0) {
      bool ready = true;
      for (std::size_t k = 0; k < D.elevators.size(); ++k)
        if (D.elevators[k].hi == next_floor && !placed[k]) ready = false;
      if (ready) {
        seq.push_back({ObjKind::Floor, next_floor});
        run(next_floor + 1);
        seq.pop_back();
      }
    }
    for (std::size_t k = 0; k < D.elevators.size(); ++k) {
      if (placed[k] || D.elevators[k].lo >= next_floor) continue;
      placed[k] = true;
      seq.push_back({ObjKind::Elevator, static_cast<int>(k)});
      run(next_floor);
      seq.pop_back();
      placed[k] = false;
    }
    for (int f = next_floor; f < D.d; ++f) {
      auto& left = ends_left[static_cast<std::size_t>(f)];
      if (left == 0) continue;
      --left;
      seq.push_back({ObjKind::End, f});
      run(next_floor);
      seq.pop_back();
      ++left;
    }
  }
};

}  // namespace detail

/// All floor diagrams of degree d (1 <= d <= 4), in a fixed deterministic order.
inline std::vector<FloorDiagram> enumerate_floor_diagrams(int d) {
  if (d < 1 || d > 4) throw std::invalid_argument("degree must lie in 1..4");
  std::vector<std::pair<int, int>> pool;
  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b) pool.emplace_back(a, b);
  std::vector<std::vector<std::pair<int, int>>> trees;
  std::vector<std::pair<int, int>> chosen;
  detail::spanning_trees(d, pool, 0, chosen, trees);

  std::vector<FloorDiagram> out;
  for (const auto& tree : trees) {
    const std::size_t k = tree.size();
    std::vector<std::int64_t> w(k, 1);
    while (true) {
      FloorDiagram D{d, {}, std::vector<int>(static_cast<std::size_t>(d), 0)};
      for (std::size_t i = 0; i < k; ++i) D.elevators.push_back({tree[i].first, tree[i].second, w[i]});
      std::vector<std::int64_t> net(static_cast<std::size_t>(d), 1);
      for (const auto& e : D.elevators) {
        net[static_cast<std::size_t>(e.lo)] += e.w;
        net[static_cast<std::size_t>(e.hi)] -= e.w;
      }
      bool ok = true;
      for (int f = 0; f < d; ++f) {
        if (net[static_cast<std::size_t>(f)] < 0) ok = false;
        else D.ends[static_cast<std::size_t>(f)] = static_cast<int>(net[static_cast<std::size_t>(f)]);
      }
      if (ok) out.push_back(D);
      std::size_t i = 0;
      while (i < k && w[i] == d) w[i++] = 1;
      if (i == k) break;
      ++w[i];
    }
  }
  return out;
}

/// All compatible markings of D.  Ends of a floor are interchangeable, so
/// each order of identical ends is produced once.
inline std::vector<std::vector<ObjectRef>> enumerate_markings(const FloorDiagram& D) {
  std::vector<std::vector<ObjectRef>> out;
  detail::MarkingBuilder b{D, {}, D.ends, std::vector<bool>(D.elevators.size(), false), &out};
  b.run(0);
  return out;
}

inline std::vector<MarkedDiagram> enumerate_diagrams_uncached(int d) {
  std::vector<MarkedDiagram> out;
  for (auto& D : enumerate_floor_diagrams(d))
    for (auto& m : enumerate_markings(D)) out.push_back({D, std::move(m)});
  return out;
}

/// Complete duplicate-free list of marked diagrams for degree d (1..4).
inline const std::vector<MarkedDiagram>& enumerate_diagrams(int d) {
  if (d < 1 || d > 4) throw std::invalid_argument("degree must lie in 1..4");
  static std::mutex mu;
  static std::map<int, std::vector<MarkedDiagram>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(d);
  if (it == cache.end()) it = cache.emplace(d, enumerate_diagrams_uncached(d)).first;
  return it->second;
}

/// Flat token encoding used for canonical comparison: End -> (0, floor),
/// Elevator -> (1, lo, hi, w), Floor -> (2).
inline std::vector<std::int64_t> encode(const FloorDiagram& D, const std::vector<ObjectRef>& marking) {
  std::vector<std::int64_t> r;
  r.reserve(marking.size() * 3);
  for (const auto& o : marking) {
    switch (o.kind) {
      case ObjKind::End:
        r.insert(r.end(), {0, o.index});
        break;
      case ObjKind::Elevator: {
        const auto& e = D.elevators[static_cast<std::size_t>(o.index)];
        r.insert(r.end(), {1, e.lo, e.hi, e.w});
        break;
      }
      case ObjKind::Floor:
        r.push_back(2);
        break;
    }
  }
  return r;
}

}  // namespace gwfloor
