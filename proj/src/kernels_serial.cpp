// Straightforward reference versions of the kernels. Bounds are found by
// scanning every common lower (upper) bound instead of the cover recursion.

#include "pclat/kernels.hpp"

namespace pclat::kernels::serial {

namespace {

template <bool IsMeet>
std::vector<Element> bound_table(const OrderView& order) {
  const int n = order.n;
  const BitMatrix& sets = IsMeet ? *order.down : *order.up;
  std::vector<Element> table(static_cast<std::size_t>(n) * n, kMissing);
  std::vector<std::uint64_t> common(sets.words());
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const auto ra = sets.row(a);
      const auto rb = sets.row(b);
      for (std::size_t w = 0; w < common.size(); ++w) common[w] = ra[w] & rb[w];
      Element found = kMissing;
      for_each_bit(common, [&](int x) {
        if (found != kMissing) return;
        const auto rx = sets.row(x);
        bool covers_all = true;
        for (std::size_t w = 0; w < common.size(); ++w) {
          if ((common[w] & ~rx[w]) != 0) covers_all = false;
        }
        if (covers_all) found = x;
      });
      table[static_cast<std::size_t>(a) * n + b] = found;
    }
  }
  return table;
}

}  // namespace

std::vector<Element> meet_table(const OrderView& order) { return bound_table<true>(order); }
std::vector<Element> join_table(const OrderView& order) { return bound_table<false>(order); }

std::optional<Triple> modular_violation(const FiniteLattice& L) {
  const int n = L.size();
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c) {
        if (!L.leq(a, c)) continue;
        if (L.join(a, L.meet(b, c)) != L.meet(L.join(a, b), c)) return Triple{a, b, c};
      }
  return std::nullopt;
}

std::optional<Triple> distributive_violation(const FiniteLattice& L) {
  const int n = L.size();
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c) {
        if (L.meet(a, L.join(b, c)) != L.join(L.meet(a, b), L.meet(a, c))) return Triple{a, b, c};
      }
  return std::nullopt;
}

std::optional<Triple> ternary_witness(const FiniteLattice& L) {
  const int n = L.size();
  const Element z = L.bottom();
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c) {
        if (a == z || b == z || c == z) continue;
        if (L.meet(c, a) != z || L.meet(c, b) != z) continue;
        const Element ab = L.join(a, b);
        if (L.join(c, a) == ab && L.join(c, b) == ab) return Triple{a, b, c};
      }
  return std::nullopt;
}

}  // namespace pclat::kernels::serial
