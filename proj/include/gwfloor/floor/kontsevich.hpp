#pragma once

#include <stdexcept>
#include <vector>

#include "gwfloor/checked_int.hpp"

namespace gwfloor {

inline CheckedInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  CheckedInt r{1};
  for (int i = 1; i <= k; ++i) r = CheckedInt{(r * CheckedInt{n - k + i}).value() / i};
  return r;
}

/// Number of rational plane curves of degree d through 3d-1 general points.
inline CheckedInt kontsevich_nd(int d) {
  if (d < 1) throw std::invalid_argument("degree must be positive");
  std::vector<CheckedInt> N(static_cast<std::size_t>(d) + 1, 0);
  N[1] = 1;
  for (int n = 2; n <= d; ++n) {
    CheckedInt acc{0};
    for (int a = 1; a < n; ++a) {
      const int b = n - a;
      CheckedInt a2b2 = CheckedInt{a} * a * b * b;
      CheckedInt a3b = CheckedInt{a} * a * a * b;
      acc += N[static_cast<std::size_t>(a)] * N[static_cast<std::size_t>(b)] *
             (a2b2 * binomial(3 * n - 4, 3 * a - 2) - a3b * binomial(3 * n - 4, 3 * a - 1));
    }
    N[static_cast<std::size_t>(n)] = acc;
  }
  return N[static_cast<std::size_t>(d)];
}

}  // namespace gwfloor
