#pragma once

// Decision procedures for modularity, distributivity and
// pseudocomplementedness. Every finite lattice is inductive, so maximal
// disjoint elements always exist and no inductivity check is offered.

#include <array>
#include <optional>
#include <vector>

#include "pclat/finite_lattice.hpp"

namespace pclat {

using Triple = std::array<Element, 3>;

struct ModularityVerdict {
  bool modular = true;
  /// (a, b, c) with a <= c and join(a, meet(b, c)) != meet(join(a, b), c).
  std::optional<Triple> violation;
};

struct DistributivityVerdict {
  bool distributive = true;
  /// (a, b, c) with meet(a, join(b, c)) != join(meet(a, b), meet(a, c)).
  std::optional<Triple> violation;
};

/// Least-index element without a pseudocomplement, and its two smallest
/// maximal disjoint elements.
struct PseudocomplementFailure {
  Element element;
  Element first_maximal;
  Element second_maximal;
};

struct PseudocomplementVerdict {
  bool pseudocomplemented = true;
  std::optional<std::vector<Element>> pc_map;  // a -> a*
  std::optional<PseudocomplementFailure> failure;
};

struct Proposition1Verdict {
  bool holds = true;
  /// (a, b, x): b maximal disjoint from a, x != bottom, meet(join(a, b), x) = bottom.
  std::optional<Triple> counterexample;
};

ModularityVerdict is_modular(const FiniteLattice& lattice);
DistributivityVerdict is_distributive(const FiniteLattice& lattice);

/// Maximal elements of {x : meet(a, x) = bottom}, ascending.
std::vector<Element> maximal_disjoint(const FiniteLattice& lattice, Element a);

/// Greatest element disjoint from a, if there is one.
std::optional<Element> pseudocomplement(const FiniteLattice& lattice, Element a);

PseudocomplementVerdict is_pseudocomplemented(const FiniteLattice& lattice);

/// For modular lattices, a join with a maximal disjoint element meets every
/// nonzero element nontrivially. Throws NotModular otherwise.
Proposition1Verdict check_proposition1(const FiniteLattice& lattice);

}  // namespace pclat
