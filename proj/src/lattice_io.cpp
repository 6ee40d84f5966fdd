#include "pclat/lattice_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pclat/error.hpp"

namespace pclat {

using nlohmann::json;

CoverList parse_lattice_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw LatticeError(ErrorKind::ParseError, e.what());
  }
  if (!doc.is_object()) throw LatticeError(ErrorKind::ParseError, "top level must be an object");
  if (!doc.contains("size") || !doc["size"].is_number_integer())
    throw LatticeError(ErrorKind::ParseError, "\"size\" must be an integer");
  if (!doc.contains("covers") || !doc["covers"].is_array())
    throw LatticeError(ErrorKind::ParseError, "\"covers\" must be an array");

  CoverList out;
  const auto size = doc["size"].get<long long>();
  if (size < 1 || size > 1'000'000) throw LatticeError(ErrorKind::ParseError, "\"size\" out of range");
  out.size = static_cast<int>(size);
  for (const auto& c : doc["covers"]) {
    if (!c.is_array() || c.size() != 2 || !c[0].is_number_integer() || !c[1].is_number_integer())
      throw LatticeError(ErrorKind::ParseError, "each cover must be a pair of integers");
    const auto lo = c[0].get<long long>();
    const auto hi = c[1].get<long long>();
    if (lo < 0 || lo >= size || hi < 0 || hi >= size)
      throw LatticeError(ErrorKind::ParseError, "cover index out of range",
                         std::pair{static_cast<int>(std::clamp(lo, -1LL, size)),
                                   static_cast<int>(std::clamp(hi, -1LL, size))});
    out.covers.emplace_back(static_cast<int>(lo), static_cast<int>(hi));
  }
  if (doc.contains("labels")) {
    const auto& labels = doc["labels"];
    if (!labels.is_array() || static_cast<long long>(labels.size()) != size)
      throw LatticeError(ErrorKind::ParseError, "\"labels\" must be an array of `size` strings");
    for (const auto& l : labels) {
      if (!l.is_string()) throw LatticeError(ErrorKind::ParseError, "labels must be strings");
      out.labels.push_back(l.get<std::string>());
    }
  }
  return out;
}

FiniteLattice read_lattice_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw LatticeError(ErrorKind::ParseError, "cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return FiniteLattice::build_from_covers(parse_lattice_json(buffer.str()));
}

std::string to_lattice_json(const FiniteLattice& lattice) {
  json doc;
  doc["size"] = lattice.size();
  json covers = json::array();
  for (const auto& [lo, hi] : lattice.covers()) covers.push_back({lo, hi});
  doc["covers"] = covers;
  if (lattice.has_labels()) doc["labels"] = lattice.labels();
  return doc.dump() + "\n";
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw LatticeError(ErrorKind::InvalidInput, "cannot write " + path);
  out << text;
}

std::string to_dot(const FiniteLattice& lattice, const std::string& graph_name) {
  std::ostringstream out;
  out << "digraph " << json(graph_name).dump() << " {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (Element x = 0; x < lattice.size(); ++x) {
    out << "  n" << x << " [label=" << json(lattice.label(x)).dump() << "];\n";
  }
  for (const auto& [lo, hi] : lattice.covers()) out << "  n" << lo << " -> n" << hi << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace pclat
