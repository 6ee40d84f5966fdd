#include <atomic>
#include <bit>
#include <limits>

#include "pclat/kernels.hpp"

namespace pclat::kernels {

BitMatrix disjoint_sets(const FiniteLattice& lattice) {
  const int n = lattice.size();
  BitMatrix out(static_cast<std::size_t>(n));
  const Element zero = lattice.bottom();
#pragma omp parallel for schedule(static)
  for (int a = 0; a < n; ++a) {
    for (int x = 0; x < n; ++x) {
      if (lattice.meet(a, x) == zero) out.set(a, x);
    }
  }
  return out;
}

namespace {

// Bound of a and b from the already computed bounds of the neighbours of a
// (lower covers for meets, upper covers for joins). The true bound, if it
// exists, is the greatest (resp. least) of those candidates.
template <bool IsMeet>
std::vector<Element> bound_table(const OrderView& order) {
  const int n = order.n;
  const std::size_t stride = static_cast<std::size_t>(n);
  std::vector<Element> table(stride * stride, kMissing);
  const auto& neighbours = IsMeet ? *order.lower : *order.upper;
  const auto& extent = IsMeet ? order.down_count : order.up_count;
  // candidate c dominates m when m is below c for meets, above for joins
  auto dominated = [&](Element m, Element c) {
    return IsMeet ? order.up->test(m, c) : order.up->test(c, m);
  };

  for (int step = 0; step < n; ++step) {
    const Element a = IsMeet ? order.topo[step] : order.topo[n - 1 - step];
    Element* row = table.data() + stride * a;
#pragma omp parallel for schedule(static)
    for (int b = 0; b < n; ++b) {
      if (order.up->test(a, b)) {
        row[b] = IsMeet ? a : b;
        continue;
      }
      if (order.up->test(b, a)) {
        row[b] = IsMeet ? b : a;
        continue;
      }
      Element best = kMissing;
      bool missing = neighbours[a].empty();
      for (Element nb : neighbours[a]) {
        const Element c = table[stride * nb + b];
        if (c == kMissing) {
          missing = true;
          break;
        }
        if (best == kMissing || extent[c] > extent[best]) best = c;
      }
      if (!missing) {
        for (Element nb : neighbours[a]) {
          if (!dominated(table[stride * nb + b], best)) {
            missing = true;
            break;
          }
        }
      }
      row[b] = missing ? kMissing : best;
    }
  }
  return table;
}

// Runs `scan(a)` for every a, returning the hit for the least a that has
// one. Rows above the best hit so far are skipped.
template <typename Scan>
std::optional<Triple> least_over_rows(int n, Scan scan) {
  std::vector<std::optional<Triple>> hits(static_cast<std::size_t>(n));
  std::atomic<int> best{std::numeric_limits<int>::max()};
#pragma omp parallel for schedule(dynamic, 1)
  for (int a = 0; a < n; ++a) {
    if (a > best.load(std::memory_order_relaxed)) continue;
    hits[a] = scan(a);
    if (hits[a]) {
      int cur = best.load(std::memory_order_relaxed);
      while (a < cur && !best.compare_exchange_weak(cur, a)) {
      }
    }
  }
  const int b = best.load();
  if (b == std::numeric_limits<int>::max()) return std::nullopt;
  return hits[b];
}

}  // namespace

namespace parallel {

std::vector<Element> meet_table(const OrderView& order) { return bound_table<true>(order); }
std::vector<Element> join_table(const OrderView& order) { return bound_table<false>(order); }

std::optional<Triple> modular_violation(const FiniteLattice& L) {
  const int n = L.size();
  const BitMatrix& up = L.up_sets();
  const BitMatrix& down = L.down_sets();
  const std::size_t words = up.words();
  // Both sides agree whenever b is comparable to a or to c, so only
  // c above a and incomparable to b can fail.
  return least_over_rows(n, [&](Element a) -> std::optional<Triple> {
    const auto ua = up.row(a);
    for (Element b = 0; b < n; ++b) {
      if (L.comparable(a, b)) continue;
      const Element ab = L.join(a, b);
      const auto ub = up.row(b);
      const auto db = down.row(b);
      for (std::size_t w = 0; w < words; ++w) {
        std::uint64_t bits = ua[w] & ~ub[w] & ~db[w];
        while (bits) {
          const Element c = static_cast<Element>(w * 64 + std::countr_zero(bits));
          bits &= bits - 1;
          if (L.join(a, L.meet(b, c)) != L.meet(ab, c)) return Triple{a, b, c};
        }
      }
    }
    return std::nullopt;
  });
}

std::optional<Triple> distributive_violation(const FiniteLattice& L) {
  const int n = L.size();
  return least_over_rows(n, [&](Element a) -> std::optional<Triple> {
    for (Element b = 0; b < n; ++b) {
      const Element ab = L.meet(a, b);
      for (Element c = 0; c < n; ++c) {
        if (L.meet(a, L.join(b, c)) != L.join(ab, L.meet(a, c))) return Triple{a, b, c};
      }
    }
    return std::nullopt;
  });
}

std::optional<Triple> ternary_witness(const FiniteLattice& L) {
  const int n = L.size();
  const Element zero = L.bottom();
  const BitMatrix disjoint = disjoint_sets(L);
  const std::size_t words = disjoint.words();
  return least_over_rows(n, [&](Element a) -> std::optional<Triple> {
    if (a == zero) return std::nullopt;
    const auto da = disjoint.row(a);
    for (Element b = 0; b < n; ++b) {
      if (b == zero || b == a) continue;
      const Element ab = L.join(a, b);
      const auto db = disjoint.row(b);
      for (std::size_t w = 0; w < words; ++w) {
        std::uint64_t bits = da[w] & db[w];
        while (bits) {
          const Element c = static_cast<Element>(w * 64 + std::countr_zero(bits));
          bits &= bits - 1;
          if (c == zero) continue;
          if (L.join(c, a) == ab && L.join(c, b) == ab) return Triple{a, b, c};
        }
      }
    }
    return std::nullopt;
  });
}

}  // namespace parallel
}  // namespace pclat::kernels
