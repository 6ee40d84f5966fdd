#pragma once

// Lattice file format (JSON, UTF-8):
//   {"size": 5, "covers": [[0,1],[0,2],...], "labels": ["0","a",...]}
// "labels" is optional and, when present, has exactly `size` entries.

#include <string>

#include "pclat/finite_lattice.hpp"

namespace pclat {

/// Throws ParseError on malformed JSON or schema violations.
CoverList parse_lattice_json(const std::string& text);
/// Parses and validates; lattice errors propagate as LatticeError.
FiniteLattice read_lattice_file(const std::string& path);

std::string to_lattice_json(const FiniteLattice& lattice);
void write_text_file(const std::string& path, const std::string& text);

/// Hasse diagram in DOT, bottom to top: one node per element, one edge per
/// cover.
std::string to_dot(const FiniteLattice& lattice, const std::string& graph_name = "lattice");

}  // namespace pclat
