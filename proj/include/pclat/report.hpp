#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "pclat/finite_lattice.hpp"

namespace pclat {

/// One evaluated condition of an equivalence harness.
struct Condition {
  std::string key;
  std::string title;
  bool value = false;
  std::vector<Element> witness;             // indices, empty when none
  std::vector<std::string> witness_labels;  // same length as witness
  std::string detail;                       // e.g. which pattern matched

  friend bool operator==(const Condition&, const Condition&) = default;
};

/// Verdict bundle produced by the equivalence harnesses. `compared` lists
/// the condition keys that must all take the same value whenever the
/// report's hypothesis holds.
struct AnalysisReport {
  std::string subject;
  std::string kind;  // "lattice" or "group"
  int size = 0;
  std::vector<Condition> conditions;
  std::string hypothesis;
  bool hypothesis_holds = true;
  std::vector<std::string> compared;
  bool agree = true;
  double elapsed_ms = 0.0;

  const Condition& condition(const std::string& key) const;
  bool violation() const { return hypothesis_holds && !agree; }

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

/// Recomputes `agree` from the compared conditions.
void settle_agreement(AnalysisReport& report);

/// Witness indices rendered with the lattice's labels.
std::vector<std::string> witness_labels(const FiniteLattice& lattice,
                                        const std::vector<Element>& witness);

void to_json(nlohmann::json& j, const Condition& c);
void from_json(const nlohmann::json& j, Condition& c);
void to_json(nlohmann::json& j, const AnalysisReport& r);
void from_json(const nlohmann::json& j, AnalysisReport& r);

/// Human-readable multi-line rendering. Witnesses are listed only when
/// `with_witnesses` is set.
std::string format_report(const AnalysisReport& report, bool with_witnesses);

}  // namespace pclat
