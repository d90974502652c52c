#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace charbound::detail {

// Leibniz expansion of an r x r determinant over a commutative ring T,
// organised as a dynamic program over the set of columns already used.
// Row i is matched with some unused column j; the partial product is
// extended by `times_entry(partial, i, j)`, which returns nullopt when the
// entry is zero. The sign picks up one inversion per used column > j.
//
// T must provide binary + and unary -. Cost is O(r 2^r) entry products.
template <class T, class TimesEntry>
T expand_determinant(std::size_t r, const T& one, const T& zero, TimesEntry&& times_entry) {
  if (r > 20) throw std::length_error("expand_determinant: matrix too large");
  const std::uint32_t full = (std::uint32_t{1} << r) - 1;
  std::vector<std::optional<T>> partial(std::size_t{full} + 1);
  partial[0] = one;
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    if (!partial[mask]) continue;
    const auto row = static_cast<std::size_t>(std::popcount(mask));
    for (std::size_t col = 0; col < r; ++col) {
      const std::uint32_t bit = std::uint32_t{1} << col;
      if ((mask & bit) != 0) continue;
      std::optional<T> term = times_entry(*partial[mask], row, col);
      if (!term) continue;
      if (std::popcount(mask >> (col + 1)) % 2 == 1) term = -*term;
      auto& slot = partial[mask | bit];
      slot = slot ? *slot + *term : *term;
    }
  }
  return partial[full] ? *partial[full] : zero;
}

}  // namespace charbound::detail
