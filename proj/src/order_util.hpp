#pragma once

#include <vector>

#include "pclat/bit_matrix.hpp"
#include "pclat/finite_lattice.hpp"

namespace pclat::detail {

// Hasse diagram of a partial order given by its up-set and down-set rows:
// b covers a iff nothing lies strictly between them. Sorted by (a, b).
inline std::vector<Cover> hasse_covers(const BitMatrix& up, const BitMatrix& down) {
  const int n = static_cast<int>(up.size());
  std::vector<Cover> covers;
  std::vector<std::uint64_t> strict(up.words());
  for (int a = 0; a < n; ++a) {
    const auto ua = up.row(a);
    std::copy(ua.begin(), ua.end(), strict.begin());
    strict[a / 64] &= ~(std::uint64_t{1} << (a % 64));
    for_each_bit(strict, [&](int b) {
      const auto db = down.row(b);
      for (std::size_t w = 0; w < strict.size(); ++w) {
        std::uint64_t between = strict[w] & db[w];
        if (w == static_cast<std::size_t>(b / 64)) between &= ~(std::uint64_t{1} << (b % 64));
        if (between) return;
      }
      covers.emplace_back(a, b);
    });
  }
  return covers;
}

}  // namespace pclat::detail
