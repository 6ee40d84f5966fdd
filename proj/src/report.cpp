#include "pclat/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "pclat/error.hpp"

namespace pclat {

const Condition& AnalysisReport::condition(const std::string& key) const {
  auto it = std::find_if(conditions.begin(), conditions.end(),
                         [&](const Condition& c) { return c.key == key; });
  if (it == conditions.end()) throw LatticeError(ErrorKind::InvalidInput, "no condition " + key);
  return *it;
}

void settle_agreement(AnalysisReport& report) {
  report.agree = true;
  if (report.compared.empty()) return;
  const bool first = report.condition(report.compared.front()).value;
  for (const auto& key : report.compared) {
    if (report.condition(key).value != first) report.agree = false;
  }
}

std::vector<std::string> witness_labels(const FiniteLattice& lattice,
                                        const std::vector<Element>& witness) {
  std::vector<std::string> out;
  out.reserve(witness.size());
  for (Element x : witness) out.push_back(lattice.label(x));
  return out;
}

void to_json(nlohmann::json& j, const Condition& c) {
  j = nlohmann::json{{"key", c.key},
                     {"title", c.title},
                     {"value", c.value},
                     {"witness", c.witness},
                     {"witness_labels", c.witness_labels},
                     {"detail", c.detail}};
}

void from_json(const nlohmann::json& j, Condition& c) {
  j.at("key").get_to(c.key);
  j.at("title").get_to(c.title);
  j.at("value").get_to(c.value);
  j.at("witness").get_to(c.witness);
  j.at("witness_labels").get_to(c.witness_labels);
  j.at("detail").get_to(c.detail);
}

void to_json(nlohmann::json& j, const AnalysisReport& r) {
  j = nlohmann::json{{"subject", r.subject},
                     {"kind", r.kind},
                     {"size", r.size},
                     {"conditions", r.conditions},
                     {"hypothesis", r.hypothesis},
                     {"hypothesis_holds", r.hypothesis_holds},
                     {"compared", r.compared},
                     {"agree", r.agree},
                     {"elapsed_ms", r.elapsed_ms}};
}

void from_json(const nlohmann::json& j, AnalysisReport& r) {
  j.at("subject").get_to(r.subject);
  j.at("kind").get_to(r.kind);
  j.at("size").get_to(r.size);
  j.at("conditions").get_to(r.conditions);
  j.at("hypothesis").get_to(r.hypothesis);
  j.at("hypothesis_holds").get_to(r.hypothesis_holds);
  j.at("compared").get_to(r.compared);
  j.at("agree").get_to(r.agree);
  j.at("elapsed_ms").get_to(r.elapsed_ms);
}

std::string format_report(const AnalysisReport& r, bool with_witnesses) {
  std::ostringstream out;
  out << r.kind << " " << r.subject << " (" << r.size << " elements)\n";
  out << "  hypothesis: " << r.hypothesis << (r.hypothesis_holds ? "" : " [not satisfied]") << "\n";
  for (const auto& c : r.conditions) {
    const bool compared = std::find(r.compared.begin(), r.compared.end(), c.key) != r.compared.end();
    out << "  " << (compared ? "* " : "  ") << std::left << std::setw(44) << c.title
        << (c.value ? "yes" : "no");
    if (!c.detail.empty()) out << "  [" << c.detail << "]";
    out << "\n";
    if (with_witnesses && !c.witness.empty()) {
      out << "      witness:";
      for (const auto& label : c.witness_labels) out << " " << label;
      out << "\n";
    }
  }
  out << "  compared conditions (*) " << (r.agree ? "agree" : "DISAGREE") << "\n";
  out << "  elapsed: " << std::fixed << std::setprecision(3) << r.elapsed_ms << " ms\n";
  return out.str();
}

}  // namespace pclat
