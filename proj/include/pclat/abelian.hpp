#pragma once

// Finite abelian groups Z_{f1} x ... x Z_{fk} and their subgroup lattices.
// Elements are mixed-radix indices with the first factor most significant,
// so index order is lexicographic order of residue tuples.

#include <optional>
#include <string>
#include <vector>

#include "pclat/finite_lattice.hpp"
#include "pclat/report.hpp"

namespace pclat {

inline constexpr int kDefaultMaxOrder = 512;

struct AbelianGroupSpec {
  std::vector<int> factors;  // each >= 2; empty is the trivial group

  long order() const;
  /// "Z2xZ4", or "Z1" for the trivial group.
  std::string name() const;
  /// Throws InvalidInput for a factor below 2, OrderTooLarge above max_order.
  void validate(int max_order = kDefaultMaxOrder) const;

  /// Parses "2,4" (whitespace tolerated). "1" is the trivial group.
  static AbelianGroupSpec parse(const std::string& text);
};

struct Subgroup {
  std::vector<int> elements;  // ascending element indices

  friend bool operator==(const Subgroup&, const Subgroup&) = default;
};

std::vector<int> residues(const AbelianGroupSpec& group, int element);
/// Element list such as "{0,2}" or "{(0,0),(1,0)}".
std::string describe(const AbelianGroupSpec& group, const Subgroup& subgroup);

/// Every subgroup once, sorted by (order, element list). Built as the
/// closure of the trivial subgroup under adding cyclic subgroups.
std::vector<Subgroup> enumerate_subgroups(const AbelianGroupSpec& group,
                                          int max_order = kDefaultMaxOrder);

/// Subgroups ordered by inclusion; element i is enumerate_subgroups()[i].
FiniteLattice subgroup_lattice(const AbelianGroupSpec& group, int max_order = kDefaultMaxOrder);
FiniteLattice subgroup_lattice(const AbelianGroupSpec& group, const std::vector<Subgroup>& subgroups);

/// A finite abelian group is locally cyclic iff it is cyclic iff the lcm of
/// its factors equals its order.
bool is_cyclic(const AbelianGroupSpec& group);

/// Indices (into enumerate_subgroups) of nontrivial U, V, W with
/// U n W = V n W = {0} and U + V = U + W = V + W. W is the subgroup
/// disjoint from both others.
struct SubgroupTriple {
  int u, v, w;
  friend bool operator==(const SubgroupTriple&, const SubgroupTriple&) = default;
};

/// Lexicographically least triple, checked on element sets directly.
std::optional<SubgroupTriple> find_subgroup_triple_witness(const AbelianGroupSpec& group,
                                                           const std::vector<Subgroup>& subgroups);
std::optional<SubgroupTriple> find_subgroup_triple_witness(const AbelianGroupSpec& group,
                                                           int max_order = kDefaultMaxOrder);

/// Distributive, cyclic, pseudocomplemented, no anchored M3/M23, no
/// subgroup triple: all five must agree.
AnalysisReport theorem3_report(const AbelianGroupSpec& group, int max_order = kDefaultMaxOrder);

/// All factor multisets (nondecreasing lists of factors >= 2) whose product
/// is at most max_order, starting with the trivial group.
std::vector<AbelianGroupSpec> all_factor_multisets(int max_order);

}  // namespace pclat
