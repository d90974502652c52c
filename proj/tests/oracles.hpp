#pragma once

// Independent reference computations used only by the tests. Nothing here
// goes through TruncatedClass or the Pieri implementation.

#include <functional>
#include <map>
#include <vector>

#include "charbound/integer.hpp"

namespace charbound::testing {

// Coefficient of h^i in (1+h)^{m+1} prod_j (1 + d_j h)^{-1}, summing
// C(m+1, a) prod_j (-d_j)^{e_j} over all a + sum e_j = i.
inline Integer brute_chern_coefficient(int m, const std::vector<int>& degrees, int i) {
  Integer total = 0;
  std::function<void(std::size_t, int, Integer)> walk = [&](std::size_t j, int left, Integer acc) {
    if (j == degrees.size()) {
      total += acc * binomial(m + 1, left);
      return;
    }
    Integer factor = 1;
    for (int e = 0; e <= left; ++e) {
      walk(j + 1, left - e, acc * factor);
      factor *= -degrees[j];
    }
  };
  walk(0, i, Integer(1));
  return total;
}

// chi of a smooth degree-d hypersurface of dimension n:
// ((1 - d)^{n+2} - 1) / d + n + 2.
inline Integer hypersurface_euler(int n, int d) {
  Integer num = ipow(Integer(1 - d), static_cast<std::uint64_t>(n + 2)) - 1;
  return num / d + n + 2;
}

// Number of standard Young tableaux of a shape, by removing corners
// recursively (memoised).
inline Integer count_standard_tableaux(std::vector<int> shape) {
  static std::map<std::vector<int>, Integer> memo;
  while (!shape.empty() && shape.back() == 0) shape.pop_back();
  if (shape.empty()) return 1;
  if (auto it = memo.find(shape); it != memo.end()) return it->second;
  Integer total = 0;
  for (std::size_t i = 0; i < shape.size(); ++i) {
    const int next = i + 1 < shape.size() ? shape[i + 1] : 0;
    if (shape[i] > next) {
      auto smaller = shape;
      --smaller[i];
      total += count_standard_tableaux(smaller);
    }
  }
  memo[shape] = total;
  return total;
}

}  // namespace charbound::testing
