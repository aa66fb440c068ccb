#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace gwfloor {

/// Merged pairs at positions (p_i, p_i + 1), 1-based, with p_{i+1} >= p_i + 2.
/// Pair i carries the label i (1-based) in position order.
struct MergeConfiguration {
  int n = 0;
  std::vector<int> positions;

  [[nodiscard]] int pairs() const { return static_cast<int>(positions.size()); }
  [[nodiscard]] int simple_points() const { return n - 2 * pairs(); }

  friend bool operator==(const MergeConfiguration&, const MergeConfiguration&) = default;
  friend auto operator<=>(const MergeConfiguration&, const MergeConfiguration&) = default;
};

inline bool is_valid(const MergeConfiguration& c) {
  for (std::size_t i = 0; i < c.positions.size(); ++i) {
    int p = c.positions[i];
    if (p < 1 || p > c.n - 1) return false;
    if (i > 0 && p < c.positions[i - 1] + 2) return false;
  }
  return true;
}

inline std::string to_string(const MergeConfiguration& c) {
  std::string out = "{";
  for (std::size_t i = 0; i < c.positions.size(); ++i) out += (i ? "," : "") + std::to_string(c.positions[i]);
  return out + "}";
}

namespace detail {
inline void gap_subsets(int n, int s, int from, std::vector<int>& cur, std::vector<MergeConfiguration>& out) {
  if (static_cast<int>(cur.size()) == s) {
    out.push_back({n, cur});
    return;
  }
  for (int p = from; p <= n - 1; ++p) {
    cur.push_back(p);
    gap_subsets(n, s, p + 2, cur, out);
    cur.pop_back();
  }
}
}  // namespace detail

/// All gap-2 subsets of {1..n-1} of size s, lexicographic.
inline std::vector<MergeConfiguration> enumerate_merge_configs(int n, int s) {
  if (n < 1 || s < 0) throw std::invalid_argument("enumerate_merge_configs: bad arguments");
  std::vector<MergeConfiguration> out;
  if (2 * s > n) return out;
  std::vector<int> cur;
  detail::gap_subsets(n, s, 1, cur, out);
  return out;
}

/// Adjacency lists over config indices; edges move one pair by +-1.
struct ShiftGraph {
  std::vector<MergeConfiguration> nodes;
  std::vector<std::vector<int>> adj;
};

/// Pair label moved by a unit shift, or 0 when a and b are not unit shifts.
inline int shifted_pair(const MergeConfiguration& a, const MergeConfiguration& b) {
  if (a.n != b.n || a.positions.size() != b.positions.size()) return 0;
  int moved = 0;
  for (std::size_t i = 0; i < a.positions.size(); ++i) {
    int diff = a.positions[i] - b.positions[i];
    if (diff == 0) continue;
    if ((diff != 1 && diff != -1) || moved) return 0;
    moved = static_cast<int>(i) + 1;
  }
  return moved;
}

inline ShiftGraph unit_shift_graph(const std::vector<MergeConfiguration>& configs) {
  ShiftGraph g{configs, std::vector<std::vector<int>>(configs.size())};
  std::map<MergeConfiguration, int> index;
  for (std::size_t i = 0; i < configs.size(); ++i) index.emplace(configs[i], static_cast<int>(i));
  for (std::size_t i = 0; i < configs.size(); ++i) {
    for (std::size_t k = 0; k < configs[i].positions.size(); ++k) {
      for (int step : {-1, 1}) {
        MergeConfiguration c = configs[i];
        c.positions[k] += step;
        if (!is_valid(c)) continue;
        auto it = index.find(c);
        if (it != index.end()) g.adj[i].push_back(it->second);
      }
    }
  }
  return g;
}

inline bool is_connected(const ShiftGraph& g) {
  if (g.nodes.empty()) return true;
  std::vector<bool> seen(g.nodes.size(), false);
  std::vector<int> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : g.adj[static_cast<std::size_t>(v)]) {
      if (seen[static_cast<std::size_t>(w)]) continue;
      seen[static_cast<std::size_t>(w)] = true;
      ++count;
      stack.push_back(w);
    }
  }
  return count == g.nodes.size();
}

/// Unit-shift pairs (a, b) with a < b in config order.
inline std::vector<std::pair<MergeConfiguration, MergeConfiguration>> unit_shifts(int n, int s) {
  auto configs = enumerate_merge_configs(n, s);
  auto g = unit_shift_graph(configs);
  std::vector<std::pair<MergeConfiguration, MergeConfiguration>> out;
  for (std::size_t i = 0; i < configs.size(); ++i)
    for (int j : g.adj[i])
      if (static_cast<std::size_t>(j) > i) out.emplace_back(configs[i], configs[static_cast<std::size_t>(j)]);
  return out;
}

/// Configuration with pair j (1-based) split into two simple points.
inline MergeConfiguration dissolve(const MergeConfiguration& c, int j) {
  if (j < 1 || j > c.pairs()) throw std::invalid_argument("dissolve: pair label out of range");
  MergeConfiguration r = c;
  r.positions.erase(r.positions.begin() + (j - 1));
  return r;
}

}  // namespace gwfloor
