#pragma once

// Data-parallel scans behind the public lattice operations. Each kernel has
// an OpenMP implementation (used by the library) and a plain serial
// reference kept for testing and benchmarking. Both return identical
// results: searches report the lexicographically least hit.

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "pclat/bit_matrix.hpp"
#include "pclat/finite_lattice.hpp"

namespace pclat::kernels {

using Triple = std::array<Element, 3>;

/// The partial order a lattice is being built from. `topo` is a linear
/// extension (bottom first); `down_count[x]` is |{y : y <= x}|.
struct OrderView {
  int n = 0;
  const BitMatrix* up = nullptr;
  const BitMatrix* down = nullptr;
  std::span<const Element> topo;
  const std::vector<std::vector<Element>>* lower = nullptr;
  const std::vector<std::vector<Element>>* upper = nullptr;
  std::span<const std::size_t> down_count;
  std::span<const std::size_t> up_count;
};

inline constexpr Element kMissing = -1;

/// Row x is {y : meet(x, y) = bottom}.
BitMatrix disjoint_sets(const FiniteLattice& lattice);

namespace parallel {

// Greatest lower bound / least upper bound tables (row-major n*n), with
// kMissing where the bound does not exist.
std::vector<Element> meet_table(const OrderView& order);
std::vector<Element> join_table(const OrderView& order);

// Least (a, b, c) with a <= c and join(a, meet(b, c)) != meet(join(a, b), c).
std::optional<Triple> modular_violation(const FiniteLattice& lattice);
// Least (a, b, c) with meet(a, join(b, c)) != join(meet(a, b), meet(a, c)).
std::optional<Triple> distributive_violation(const FiniteLattice& lattice);
// Least (a, b, c), none bottom, meet(c,a) = meet(c,b) = bottom and
// join(c,a) = join(c,b) = join(a,b).
std::optional<Triple> ternary_witness(const FiniteLattice& lattice);

}  // namespace parallel

namespace serial {

std::vector<Element> meet_table(const OrderView& order);
std::vector<Element> join_table(const OrderView& order);
std::optional<Triple> modular_violation(const FiniteLattice& lattice);
std::optional<Triple> distributive_violation(const FiniteLattice& lattice);
std::optional<Triple> ternary_witness(const FiniteLattice& lattice);

}  // namespace serial

}  // namespace pclat::kernels
