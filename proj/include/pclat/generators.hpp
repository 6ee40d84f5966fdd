#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pclat/finite_lattice.hpp"
#include "pclat/patterns.hpp"

namespace pclat {

/// Lattice of divisors of n under divisibility (meet = gcd, join = lcm).
/// Elements are the divisors in increasing order, labeled by value.
/// Throws OutOfRange unless 1 <= n <= 10^6.
FiniteLattice divisor_lattice(std::int64_t n);

/// k-element chain 0 < 1 < ... < k-1 (1 <= k <= 4096).
FiniteLattice chain(int k);

/// Subsets of a k-set (0 <= k <= 12), ordered by (cardinality, bitmask).
/// Labels are the subsets, e.g. "{0,2}".
FiniteLattice boolean_lattice(int k);

/// M_k: bottom, k pairwise incomparable atoms, top (k >= 1).
FiniteLattice diamond(int k);

/// Named fixture: "M3", "M23", "N5", "chain(k)", "boolean(k)". The forms
/// "chain:k" and "boolean:k" are accepted as well.
/// Throws UnknownFixture or OutOfRange.
FiniteLattice fixture(const std::string& name);

FiniteLattice product(const FiniteLattice& left, const FiniteLattice& right);

/// `lower` stacked under `upper`, with lower's top identified with upper's
/// bottom.
FiniteLattice glued_sum(const FiniteLattice& lower, const FiniteLattice& upper);

/// Same lattice with element x renamed to perm[x]; labels follow.
FiniteLattice relabel(const FiniteLattice& lattice, std::span<const Element> perm);

/// One lattice per isomorphism class with 1..max_size elements
/// (max_size <= 8), ordered by size and then by canonical code.
std::vector<FiniteLattice> enumerate_lattices(int max_size);

/// Random lattice with exactly `size` elements (2 <= size <= 2000), grown
/// by repeatedly inserting a new element into a random interval [a, b].
/// Identical (size, seed) gives an identical lattice.
FiniteLattice random_lattice(int size, std::uint64_t seed);

/// Random modular lattice with at most max_size elements (4 <= max_size <=
/// 2000), assembled from chains, diamonds and M23 by products and glued
/// sums, then randomly relabeled.
FiniteLattice random_modular_lattice(int max_size, std::uint64_t seed);

/// Sub-seed for the attempt-th draw derived from a base seed (splitmix64).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t attempt) noexcept;

struct CorpusSpec {
  int max_exhaustive_size = 7;
  int random_count = 0;
  int random_size = 30;
  std::uint64_t seed = 0;
  int divisor_count = 0;
  int group_max_order = 0;

  /// Throws OutOfRange when a field violates its guard.
  void validate() const;
};

}  // namespace pclat
