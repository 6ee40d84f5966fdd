#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pclat/bit_matrix.hpp"

namespace pclat {

/// Elements of a finite lattice are dense indices 0..size-1.
using Element = int;
using Cover = std::pair<Element, Element>;  // (lower, upper)

/// Hasse-diagram input: `upper` covers `lower` for each pair.
struct CoverList {
  int size = 0;
  std::vector<Cover> covers;
  std::vector<std::string> labels;  // empty, or exactly `size` entries
};

/// Immutable, validated finite lattice with materialized meet and join
/// tables. The only way to obtain one is through build_from_covers (or a
/// function that calls it), so every instance satisfies the lattice axioms.
class FiniteLattice {
 public:
  /// Throws LatticeError with kind InvalidInput, NotAPoset,
  /// NoBoundedStructure or NotALattice.
  static FiniteLattice build_from_covers(const CoverList& input);

  int size() const noexcept { return n_; }
  Element bottom() const noexcept { return bottom_; }
  Element top() const noexcept { return top_; }

  bool leq(Element a, Element b) const noexcept { return up_.test(a, b); }
  bool less(Element a, Element b) const noexcept { return a != b && up_.test(a, b); }
  bool comparable(Element a, Element b) const noexcept {
    return up_.test(a, b) || up_.test(b, a);
  }
  Element meet(Element a, Element b) const noexcept {
    return meet_[static_cast<std::size_t>(a) * n_ + b];
  }
  Element join(Element a, Element b) const noexcept {
    return join_[static_cast<std::size_t>(a) * n_ + b];
  }

  // Row a of up_sets() is {x : a <= x}; row a of down_sets() is {x : x <= a}.
  const BitMatrix& up_sets() const noexcept { return up_; }
  const BitMatrix& down_sets() const noexcept { return down_; }

  std::span<const Element> meet_table() const noexcept { return meet_; }
  std::span<const Element> join_table() const noexcept { return join_; }

  /// Hasse diagram, sorted by (lower, upper).
  const std::vector<Cover>& covers() const noexcept { return covers_; }
  const std::vector<Element>& upper_covers(Element a) const { return upper_[a]; }
  const std::vector<Element>& lower_covers(Element a) const { return lower_[a]; }

  /// Length of the longest chain from bottom to a.
  int height(Element a) const { return height_[a]; }
  int height() const { return height_[top_]; }
  std::vector<Element> atoms() const { return upper_covers(bottom_); }

  bool has_labels() const noexcept { return !labels_.empty(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  /// The element's label, or its index when the lattice is unlabeled.
  std::string label(Element a) const;

  CoverList to_cover_list() const;

 private:
  FiniteLattice() = default;

  int n_ = 0;
  Element bottom_ = 0;
  Element top_ = 0;
  BitMatrix up_;
  BitMatrix down_;
  std::vector<Element> meet_;
  std::vector<Element> join_;
  std::vector<Cover> covers_;
  std::vector<std::vector<Element>> upper_;
  std::vector<std::vector<Element>> lower_;
  std::vector<int> height_;
  std::vector<std::string> labels_;
};

/// Smallest subset containing `seeds` that is closed under meet and join.
/// Returned sorted ascending.
std::vector<Element> generated_sublattice(const FiniteLattice& lattice,
                                          std::span<const Element> seeds);

struct Sublattice {
  FiniteLattice lattice;
  std::vector<Element> to_parent;  // sublattice index -> parent index
};

/// Restricts to a meet/join-closed subset. Element i of the result is the
/// i-th smallest index of `subset`; labels are inherited. Throws NotClosed
/// naming the least offending pair.
Sublattice restrict_to_sublattice(const FiniteLattice& lattice,
                                  std::span<const Element> subset);

/// Order isomorphism first -> second (which for lattices is the same as a
/// meet/join isomorphism), or nullopt. Search is lowest-index-first, so the
/// returned bijection is deterministic.
std::optional<std::vector<Element>> is_isomorphic(const FiniteLattice& first,
                                                  const FiniteLattice& second);

}  // namespace pclat
