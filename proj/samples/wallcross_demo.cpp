// Cubic with one double point: move the merged pair across the marking and
// watch the universal coefficient of the difference.
#include <iostream>

#include "gwfloor/wallcross.hpp"

int main() {
  using namespace gwfloor;
  const int d = 3;
  const int n = marked_points(d);

  for (const auto& c : enumerate_merge_configs(n, 1)) {
    auto count = floor_count(d, c);
    std::cout << to_string(c) << "  N = " << to_string(count) << "\n";
  }

  bool ok = true;
  for (const auto& [a, b] : unit_shifts(n, 1)) {
    auto r = wallcross_report(d, a, b);
    std::cout << to_string(a) << " -> " << to_string(b) << "  C = " << to_string(r.extraction.c_tilde)
              << (r.passed() ? "  ok" : "  FAILED") << "\n";
    ok = ok && r.passed();
  }
  return ok ? 0 : 1;
}
