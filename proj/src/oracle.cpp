#include "charbound/oracle.hpp"

#include "charbound/chern.hpp"
#include "charbound/errors.hpp"

namespace charbound {

Integer genus_plane_curve(int d) {
  if (d < 1) throw StructuralError("genus_plane_curve: degree must be >= 1");
  return Integer(d - 1) * (d - 2) / 2;
}

std::vector<Integer> exact_betti(const CompleteIntersection& ci) {
  const int n = ci.dimension();
  std::vector<Integer> b(static_cast<std::size_t>(2 * n + 1));
  Integer off_middle = 0;  // sum_{i != n} (-1)^i b_i
  for (int i = 0; i <= 2 * n; ++i) {
    if (i == n) continue;
    b[static_cast<std::size_t>(i)] = i % 2 == 0 ? 1 : 0;
    if (i % 2 == 0) off_middle += 1;
  }
  Integer middle = euler_characteristic(ci) - off_middle;
  if (n % 2 == 1) middle = -middle;
  if (middle < 0) {
    throw InconsistencyError("exact_betti: b_" + std::to_string(n) + " = " + middle.str() +
                             " < 0 for " + ci.label());
  }
  b[static_cast<std::size_t>(n)] = middle;
  return b;
}

Integer total_betti(const CompleteIntersection& ci) {
  Integer total = 0;
  for (const auto& bi : exact_betti(ci)) total += bi;
  return total;
}

}  // namespace charbound
