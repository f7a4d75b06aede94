#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace linkhom {

enum class Tri { True, False, Undetermined };
const char* to_string(Tri t);

enum class Verdict { Pass, Fail, HypothesisNotMet, Undetermined };
const char* to_string(Verdict v);

struct InputRecord {
  std::string name;
  std::string kind;
  /// 16 hex digits.
  std::string hash;
};

struct HypothesisRecord {
  std::string name;
  Tri verdict = Tri::Undetermined;
  std::string evidence;
};

/// An object computed once and shared by several sides (for example lambda M).
struct DerivedRecord {
  std::string name;
  std::vector<std::string> ops;
  nlohmann::json value;
};

/// One side of a statement: what was computed and which library operations it invoked.
struct SideRecord {
  std::string name;
  std::vector<std::string> ops;
  nlohmann::json value;
};

/// relation: "iso", "equal", "iff", "implies", "le" or "claim" (a single computed side
/// checked against the asserted value; right is then the asserted value in words).
struct ComparisonRecord {
  std::string left;
  std::string right;
  std::string relation;
  bool path_disjoint = true;
  Tri agree = Tri::Undetermined;
  std::string detail;
};

struct CheckReport {
  std::string check_id;
  std::string statement;
  std::vector<InputRecord> inputs;
  std::vector<HypothesisRecord> hypotheses;
  std::vector<DerivedRecord> derived;
  std::vector<SideRecord> sides;
  std::vector<ComparisonRecord> comparisons;
  std::vector<std::string> notes;
  Verdict verdict = Verdict::Undetermined;
  /// Script reproducing the check; filled for fail verdicts.
  std::string rerun;
  /// Wall time; kept out of the JSON so reports stay byte-identical.
  double seconds = 0;

  /// Sort key: check id, then the concatenated input hashes.
  std::string sort_key() const;
};

/// Any false hypothesis: hypothesis-not-met. Otherwise any undetermined hypothesis: undetermined.
/// Otherwise any failed comparison or path overlap: fail; any undetermined comparison: undetermined; else pass.
Verdict decide(const CheckReport& r);

struct ReportSettings {
  std::uint64_t seed = 0;
  int bound = -1;
  int retries = 64;
  std::optional<int> window_lo;
  std::optional<int> window_hi;
};

nlohmann::json to_json(const CheckReport& r);
nlohmann::json to_json(const ReportSettings& s);

struct Summary {
  int pass = 0;
  int fail = 0;
  int hypothesis_not_met = 0;
  int undetermined = 0;
};

Summary summarize(const std::vector<CheckReport>& reports);
/// 0 when every check passed or had unmet hypotheses, 1 on any fail, else 2 on any undetermined.
int exit_code(const Summary& s);

/// Canonical JSON text: sorted keys, checks ordered by sort_key, two-space indentation.
std::string emit_report(std::vector<CheckReport> reports, const ReportSettings& settings);

/// 64-bit FNV-1a as 16 hex digits.
std::string fnv_hex(const std::string& text);
std::string hex64(std::uint64_t v);

}  // namespace linkhom
