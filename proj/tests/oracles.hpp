#pragma once

// Brute-force reference computations, written without the library's
// enumeration code.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <tuple>
#include <vector>

namespace oracle {

/// Product in Z[V4] over the basis (<1>, <-1>, <2>, <-2>), then mapped to
/// (c1, ch, c2) using <-1> = h - <1> and <-2> = h - <2>.
struct V4 {
  std::array<std::int64_t, 4> c{};  // 1, -1, 2, -2
};

inline V4 v4_from_univ(std::int64_t one, std::int64_t h, std::int64_t two) {
  // h = <1> + <-1>
  return {{one + h, h, two, 0}};
}

inline V4 v4_mul(const V4& a, const V4& b) {
  // index bits: bit0 = sign, bit1 = factor 2
  static const int idx_bits[4] = {0b00, 0b01, 0b10, 0b11};
  V4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      int bits = idx_bits[i] ^ idx_bits[j];
      int k = 0;
      while (idx_bits[k] != bits) ++k;
      r.c[static_cast<std::size_t>(k)] += a.c[static_cast<std::size_t>(i)] * b.c[static_cast<std::size_t>(j)];
    }
  return r;
}

/// (c1, ch, c2) of a Z[V4] element modulo <1> + <-1> = <2> + <-2>.
inline std::tuple<std::int64_t, std::int64_t, std::int64_t> v4_to_univ(const V4& v) {
  // <-1> -> h - <1>, <-2> -> h - <2>
  return {v.c[0] - v.c[1], v.c[1] + v.c[3], v.c[2] - v.c[3]};
}

inline std::int64_t kontsevich_table(int d) {
  static const std::int64_t N[] = {0, 1, 1, 12, 620, 87304};
  return N[d];
}

/// Real signed counts of rational plane curves through 3d-1-2s real points
/// and s pairs of conjugate points (tabulated values).
inline std::int64_t welschinger(int d, int s) {
  static const std::map<std::pair<int, int>, std::int64_t> W = {
      {{1, 0}, 1},   {{1, 1}, 1},   {{2, 0}, 1},   {{2, 1}, 1},   {{2, 2}, 1},  {{3, 0}, 8},
      {{3, 1}, 6},   {{3, 2}, 4},   {{3, 3}, 2},   {{3, 4}, 0},   {{4, 0}, 240}, {{4, 1}, 144},
      {{4, 2}, 80},  {{4, 3}, 40},  {{4, 4}, 16},  {{4, 5}, 0}};
  return W.at({d, s});
}

/// Number of gap-2 subsets of {1..n-1} of size s by scanning all bitmasks.
inline int count_configs(int n, int s) {
  int count = 0;
  for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
    if (__builtin_popcount(mask) != s) continue;
    if (mask & (mask >> 1)) continue;
    ++count;
  }
  return count;
}

struct Edge {
  int lo, hi, w;
};

/// Diagrams as edge multisets, found by scanning every (d-1)-tuple of
/// weighted floor pairs and keeping trees with nonnegative end counts.
inline std::vector<std::pair<std::vector<Edge>, std::vector<int>>> diagrams(int d) {
  std::vector<Edge> pool;
  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b)
      for (int w = 1; w <= d; ++w) pool.push_back({a, b, w});
  std::vector<std::pair<std::vector<Edge>, std::vector<int>>> out;
  const int k = d - 1;
  std::vector<int> idx(static_cast<std::size_t>(k), 0);
  std::set<std::vector<int>> seen;
  std::function<void(int, int)> rec = [&](int pos, int from) {
    if (pos == k) {
      std::vector<Edge> es;
      for (int i : idx) es.push_back(pool[static_cast<std::size_t>(i)]);
      // connectivity on d vertices with d-1 edges implies a tree
      std::vector<int> comp(static_cast<std::size_t>(d));
      for (int i = 0; i < d; ++i) comp[static_cast<std::size_t>(i)] = i;
      for (int it = 0; it < d; ++it)
        for (const auto& e : es) {
          int m = std::min(comp[static_cast<std::size_t>(e.lo)], comp[static_cast<std::size_t>(e.hi)]);
          comp[static_cast<std::size_t>(e.lo)] = comp[static_cast<std::size_t>(e.hi)] = m;
        }
      for (int i = 0; i < d; ++i)
        if (comp[static_cast<std::size_t>(i)] != 0) return;
      std::vector<int> ends(static_cast<std::size_t>(d), 1);
      for (const auto& e : es) {
        ends[static_cast<std::size_t>(e.lo)] += e.w;
        ends[static_cast<std::size_t>(e.hi)] -= e.w;
      }
      for (int v : ends)
        if (v < 0) return;
      out.emplace_back(es, ends);
      return;
    }
    for (int i = from; i < static_cast<int>(pool.size()); ++i) {
      idx[static_cast<std::size_t>(pos)] = i;
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 0);
  return out;
}

/// Count of distinct marked orders, by permuting labelled objects and
/// dividing out identical ends of a floor.
inline std::int64_t marked_count(int d) {
  std::int64_t total = 0;
  for (const auto& [es, ends] : diagrams(d)) {
    // object codes: floor f -> (0,f), elevator i -> (1,i), end -> (2,f)
    std::vector<std::pair<int, int>> objs;
    for (int f = 0; f < d; ++f) objs.push_back({0, f});
    for (int i = 0; i < static_cast<int>(es.size()); ++i) objs.push_back({1, i});
    for (int f = 0; f < d; ++f)
      for (int c = 0; c < ends[static_cast<std::size_t>(f)]; ++c) objs.push_back({2, f});
    std::sort(objs.begin(), objs.end());
    do {
      std::vector<int> pos_floor(static_cast<std::size_t>(d));
      for (int p = 0; p < static_cast<int>(objs.size()); ++p)
        if (objs[static_cast<std::size_t>(p)].first == 0) pos_floor[static_cast<std::size_t>(objs[static_cast<std::size_t>(p)].second)] = p;
      bool ok = true;
      for (int f = 0; f + 1 < d; ++f)
        if (pos_floor[static_cast<std::size_t>(f)] > pos_floor[static_cast<std::size_t>(f + 1)]) ok = false;
      for (int p = 0; ok && p < static_cast<int>(objs.size()); ++p) {
        auto [kind, i] = objs[static_cast<std::size_t>(p)];
        if (kind == 1) {
          const auto& e = es[static_cast<std::size_t>(i)];
          if (!(pos_floor[static_cast<std::size_t>(e.lo)] < p && p < pos_floor[static_cast<std::size_t>(e.hi)])) ok = false;
        } else if (kind == 2) {
          if (p > pos_floor[static_cast<std::size_t>(i)]) ok = false;
        }
      }
      if (ok) ++total;
    } while (std::next_permutation(objs.begin(), objs.end()));
  }
  return total;
}

}  // namespace oracle
