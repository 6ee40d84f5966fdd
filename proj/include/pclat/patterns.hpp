#pragma once

// Forbidden 0-sublattices and ternary witnesses: the two obstructions to
// pseudocomplementedness in a modular lattice.

#include <optional>
#include <string>
#include <vector>

#include "pclat/finite_lattice.hpp"
#include "pclat/report.hpp"

namespace pclat {

enum class Pattern { M3, M23, N5 };

const char* to_string(Pattern p) noexcept;
std::optional<Pattern> parse_pattern(const std::string& name);

/// Cover lists of the fixture lattices, elements numbered bottom first, by
/// rank, then left to right.
///   M3:  0 < 1,2,3 < 4
///   M23: 0 < p=1, q=2;  p < l=3, m=4, r=5;  q < r;  l,m,r < 6
///   N5:  0 < 1 < 3 < 4,  0 < 2 < 4
CoverList pattern_covers(Pattern p);
const FiniteLattice& pattern_lattice(Pattern p);

struct PatternEmbedding {
  Pattern pattern;
  std::vector<Element> mapping;  // pattern element -> target element

  friend bool operator==(const PatternEmbedding&, const PatternEmbedding&) = default;
};

/// Meet- and join-preserving injection of `pattern` into `lattice`. With
/// `anchor_bottom` the pattern's bottom must land on the lattice's bottom
/// (a 0-sublattice). Backtracking in increasing target index order.
std::optional<PatternEmbedding> find_zero_sublattice_embedding(const FiniteLattice& lattice,
                                                               Pattern pattern,
                                                               bool anchor_bottom = true);

/// (a, b, c), all nonzero, with c^a = c^b = 0 and cva = cvb = avb.
struct TernaryWitness {
  Element a, b, c;
  friend bool operator==(const TernaryWitness&, const TernaryWitness&) = default;
};

bool is_ternary_witness(const FiniteLattice& lattice, const TernaryWitness& w);

/// Lexicographically least witness, if any.
std::optional<TernaryWitness> find_ternary_witness(const FiniteLattice& lattice);

struct WitnessClass {
  Pattern pattern;                 // M3 or M23
  std::vector<Element> elements;   // generated sublattice, ascending
};

/// Identifies the sublattice generated by a witness. Throws InvalidWitness
/// for a non-witness and ClassificationFailed when the generated sublattice
/// is neither M3 nor M23 (which cannot happen in a modular lattice).
WitnessClass classify_witness(const FiniteLattice& lattice, const TernaryWitness& w);

/// Evaluates pseudocomplementedness, absence of anchored M3/M23 and absence
/// of a ternary witness independently. The hypothesis is modularity.
AnalysisReport theorem1_report(const FiniteLattice& lattice, const std::string& subject = "");

}  // namespace pclat
