// pclat: analyze finite lattices and subgroup lattices of finite abelian
// groups for pseudocomplementedness and its forbidden-sublattice
// characterizations.
//
// Exit codes: 0 success/agreement, 1 equivalence violation, 2 invalid input.

#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <regex>

#include <CLI11.hpp>
#include <json.hpp>

#include "pclat/abelian.hpp"
#include "pclat/error.hpp"
#include "pclat/generators.hpp"
#include "pclat/lattice_io.hpp"
#include "pclat/patterns.hpp"
#include "pclat/report.hpp"

namespace {

using namespace pclat;

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kInvalid = 2;

void print_report(const AnalysisReport& report, bool as_json, bool witnesses) {
  if (as_json) {
    std::cout << nlohmann::json(report).dump(2) << "\n";
  } else {
    std::cout << format_report(report, witnesses);
  }
}

int cmd_check(const std::string& path, bool as_json, bool witnesses) {
  const FiniteLattice lattice = read_lattice_file(path);
  const auto report = theorem1_report(lattice, path);
  print_report(report, as_json, witnesses);
  return report.violation() ? kViolation : kOk;
}

int cmd_group(const std::string& factors, bool as_json, bool witnesses, const std::string& dot_path,
              int max_order) {
  const auto spec = AbelianGroupSpec::parse(factors);
  const auto report = theorem3_report(spec, max_order);
  if (!dot_path.empty()) write_text_file(dot_path, to_dot(subgroup_lattice(spec, max_order), spec.name()));
  print_report(report, as_json, witnesses);
  return report.violation() ? kViolation : kOk;
}

FiniteLattice generate(const std::string& name, int max_order) {
  std::smatch m;
  static const std::regex divisors(R"(divisors(?:\((\d+)\)|:(\d+)))");
  static const std::regex random(R"((random|modular)(?:\((\d+),(\d+)\)|:(\d+):(\d+)))");
  static const std::regex group(R"(group[:(]([\d, ]+)\)?)");
  if (std::regex_match(name, m, divisors)) {
    const std::string n = m[1].matched ? m[1].str() : m[2].str();
    if (n.size() > 9) throw LatticeError(ErrorKind::OutOfRange, "divisor argument too large");
    return divisor_lattice(std::stoll(n));
  }
  if (std::regex_match(name, m, random)) {
    const std::string size = m[2].matched ? m[2].str() : m[4].str();
    const std::string seed = m[3].matched ? m[3].str() : m[5].str();
    if (size.size() > 6 || seed.size() > 19) throw LatticeError(ErrorKind::OutOfRange, "argument too large");
    return m[1] == "random" ? random_lattice(std::stoi(size), std::stoull(seed))
                            : random_modular_lattice(std::stoi(size), std::stoull(seed));
  }
  if (std::regex_match(name, m, group)) return subgroup_lattice(AbelianGroupSpec::parse(m[1]), max_order);
  return fixture(name);
}

int cmd_gen(const std::string& name, const std::string& out_path, int max_order) {
  const auto lattice = generate(name, max_order);
  const auto text = to_lattice_json(lattice);
  if (out_path.empty()) std::cout << text;
  else write_text_file(out_path, text);
  return kOk;
}

int cmd_export(const std::string& path, const std::string& format, const std::string& out_path) {
  if (format != "dot") throw LatticeError(ErrorKind::InvalidInput, "unsupported format " + format);
  const auto lattice = read_lattice_file(path);
  const auto text = to_dot(lattice, std::filesystem::path(path).stem().string());
  if (out_path.empty()) std::cout << text;
  else write_text_file(out_path, text);
  return kOk;
}

struct CorpusItem {
  std::string subject;
  std::function<FiniteLattice()> make;
};

int cmd_corpus(const CorpusSpec& spec, const std::string& dump_dir, bool as_json) {
  spec.validate();
  const auto start = std::chrono::steady_clock::now();
  std::vector<FiniteLattice> exhaustive;
  if (spec.max_exhaustive_size > 0) exhaustive = enumerate_lattices(spec.max_exhaustive_size);

  std::vector<CorpusItem> items;
  for (std::size_t i = 0; i < exhaustive.size(); ++i) {
    items.push_back({"exhaustive#" + std::to_string(i) + " (size " +
                         std::to_string(exhaustive[i].size()) + ")",
                     [&exhaustive, i] { return exhaustive[i]; }});
  }
  for (int n = 1; n <= spec.divisor_count; ++n) {
    items.push_back({"divisors(" + std::to_string(n) + ")", [n] { return divisor_lattice(n); }});
  }
  for (int k = 0; k < spec.random_count; ++k) {
    const auto seed = derive_seed(spec.seed, static_cast<std::uint64_t>(k));
    const int size = spec.random_size;
    items.push_back({"random(" + std::to_string(size) + "," + std::to_string(seed) + ")",
                     [size, seed] { return random_lattice(size, seed); }});
  }
  if (spec.group_max_order > 0) {
    for (const auto& g : all_factor_multisets(spec.group_max_order)) {
      items.push_back({"L(" + g.name() + ")", [g] { return subgroup_lattice(g); }});
    }
  }

  std::vector<AnalysisReport> reports(items.size());
  std::vector<std::string> failures(items.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t i = 0; i < items.size(); ++i) {
    try {
      const auto lattice = items[i].make();
      reports[i] = theorem1_report(lattice, items[i].subject);
      if (reports[i].violation() && !dump_dir.empty()) {
        std::filesystem::create_directories(dump_dir);
        write_text_file((std::filesystem::path(dump_dir) / ("violation_" + std::to_string(i) + ".json")).string(),
                        to_lattice_json(lattice));
      }
    } catch (const std::exception& e) {
      failures[i] = e.what();
    }
  }

  std::map<std::string, long> counts;
  long violations = 0;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (!failures[i].empty()) {
      std::cerr << "error in " << items[i].subject << ": " << failures[i] << "\n";
      ++counts["errors"];
      ++violations;
      continue;
    }
    const auto& r = reports[i];
    ++counts["lattices"];
    ++counts[r.hypothesis_holds ? "modular" : "not_modular"];
    if (r.condition("distributive").value) ++counts["distributive"];
    if (r.condition("a_pseudocomplemented").value) ++counts["pseudocomplemented"];
    const auto& b = r.condition("b_no_forbidden_0_sublattice");
    if (!b.value) ++counts[b.detail.substr(0, b.detail.find(' ')) + "_0_sublattice"];
    const auto& c = r.condition("c_no_ternary_witness");
    if (!c.value) ++counts["ternary_witness"];
    if (c.detail == "generates M3") ++counts["witness_generates_M3"];
    if (c.detail == "generates M23") ++counts["witness_generates_M23"];
    if (r.hypothesis_holds) ++counts[r.agree ? "modular_agree" : "modular_disagree"];
    if (r.violation()) {
      ++violations;
      std::cerr << "equivalence violation: " << r.subject << "\n";
    }
  }
  counts["violations"] = violations;

  if (as_json) {
    std::cout << nlohmann::json(counts).dump(2) << "\n";
  } else {
    for (const auto& [key, value] : counts) std::cout << key << ": " << value << "\n";
  }
  std::cerr << "corpus finished in "
            << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() << " s\n";
  return violations == 0 ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite lattice analysis: pseudocomplements, forbidden 0-sublattices, subgroup lattices"};
  app.require_subcommand(1);

  bool as_json = false, witnesses = false;
  std::string path, factors, dot_path, name, out_path, format = "dot", dump_dir = "corpus_failures";
  int max_order = kDefaultMaxOrder;
  CorpusSpec corpus;
  bool corpus_flags = false;

  auto* check = app.add_subcommand("check", "Analyze a lattice file");
  check->add_option("file", path, "Lattice JSON file")->required();
  check->add_flag("--json", as_json, "Machine-readable report");
  check->add_flag("--witness", witnesses, "Print witnesses and embeddings");

  auto* group = app.add_subcommand("group", "Analyze the subgroup lattice of a finite abelian group");
  group->add_option("factors", factors, "Cyclic factor orders, e.g. 2,4")->required();
  group->add_flag("--json", as_json, "Machine-readable report");
  group->add_flag("--witness", witnesses, "Print witnesses and embeddings");
  group->add_option("--dot", dot_path, "Write the subgroup lattice Hasse diagram");
  group->add_option("--max-order", max_order, "Largest accepted group order")->check(CLI::PositiveNumber);

  auto* gen = app.add_subcommand("gen", "Emit a lattice in the JSON format");
  gen->add_option("name", name,
                  "M3 | M23 | N5 | chain(k) | boolean(k) | divisors(n) | random(size,seed) | "
                  "modular(max,seed) | group:2,4")
      ->required();
  gen->add_option("-o,--output", out_path, "Output file (default stdout)");
  gen->add_option("--max-order", max_order, "Largest accepted group order")->check(CLI::PositiveNumber);

  auto* corpus_cmd = app.add_subcommand("corpus", "Check the pseudocomplementedness equivalences over a corpus");
  auto flag = [&](CLI::Option* o) { o->each([&](const std::string&) { corpus_flags = true; }); };
  const int default_max = corpus.max_exhaustive_size;
  corpus.max_exhaustive_size = 0;
  flag(corpus_cmd->add_option("--max-size", corpus.max_exhaustive_size, "Every lattice up to this size (<= 8)"));
  flag(corpus_cmd->add_option("--divisors", corpus.divisor_count, "Divisor lattices of 1..N"));
  flag(corpus_cmd->add_option("--random", corpus.random_count, "Number of random lattices"));
  corpus_cmd->add_option("--size", corpus.random_size, "Size of each random lattice");
  corpus_cmd->add_option("--seed", corpus.seed, "Base seed for random lattices");
  flag(corpus_cmd->add_option("--groups", corpus.group_max_order, "Subgroup lattices of abelian groups up to this order"));
  corpus_cmd->add_option("--dump-dir", dump_dir, "Where disagreeing lattices are written");
  corpus_cmd->add_flag("--json", as_json, "Machine-readable summary");

  auto* exp = app.add_subcommand("export", "Export a lattice file as a Hasse diagram");
  exp->add_option("file", path, "Lattice JSON file")->required();
  exp->add_option("--format", format, "Output format (dot)");
  exp->add_option("-o,--output", out_path, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  try {
    if (*check) return cmd_check(path, as_json, witnesses);
    if (*group) return cmd_group(factors, as_json, witnesses, dot_path, max_order);
    if (*gen) return cmd_gen(name, out_path, max_order);
    if (*exp) return cmd_export(path, format, out_path);
    if (*corpus_cmd) {
      if (!corpus_flags) corpus.max_exhaustive_size = default_max;
      return cmd_corpus(corpus, dump_dir, as_json);
    }
  } catch (const LatticeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return kInvalid;
}
