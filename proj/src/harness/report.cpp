#include "linkhom/harness/report.hpp"

#include <algorithm>
#include <cstdio>

namespace linkhom {

using nlohmann::json;

const char* to_string(Tri t) {
  switch (t) {
    case Tri::True: return "true";
    case Tri::False: return "false";
    case Tri::Undetermined: return "undetermined";
  }
  return "?";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::HypothesisNotMet: return "hypothesis-not-met";
    case Verdict::Undetermined: return "undetermined";
  }
  return "?";
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string fnv_hex(const std::string& text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return hex64(h);
}

std::string CheckReport::sort_key() const {
  std::string key = check_id + "|";
  for (const auto& in : inputs) key += in.hash;
  return key;
}

Verdict decide(const CheckReport& r) {
  bool undetermined = false;
  for (const auto& h : r.hypotheses) {
    if (h.verdict == Tri::False) return Verdict::HypothesisNotMet;
    if (h.verdict == Tri::Undetermined) undetermined = true;
  }
  if (undetermined) return Verdict::Undetermined;
  bool open = false;
  for (const auto& c : r.comparisons) {
    if (c.agree == Tri::False || !c.path_disjoint) return Verdict::Fail;
    if (c.agree == Tri::Undetermined) open = true;
  }
  if (open || r.comparisons.empty()) return Verdict::Undetermined;
  return Verdict::Pass;
}

json to_json(const CheckReport& r) {
  json j;
  j["check_id"] = r.check_id;
  j["statement"] = r.statement;
  j["inputs"] = json::array();
  for (const auto& in : r.inputs) j["inputs"].push_back({{"name", in.name}, {"kind", in.kind}, {"hash", in.hash}});
  j["hypotheses"] = json::array();
  for (const auto& h : r.hypotheses) {
    j["hypotheses"].push_back({{"name", h.name}, {"verdict", to_string(h.verdict)}, {"evidence", h.evidence}});
  }
  j["derived"] = json::array();
  for (const auto& d : r.derived) j["derived"].push_back({{"name", d.name}, {"ops", d.ops}, {"value", d.value}});
  j["conclusion_sides"] = json::array();
  for (const auto& s : r.sides) j["conclusion_sides"].push_back({{"name", s.name}, {"ops", s.ops}, {"value", s.value}});
  j["comparisons"] = json::array();
  for (const auto& c : r.comparisons) {
    j["comparisons"].push_back({{"left", c.left},
                                {"right", c.right},
                                {"relation", c.relation},
                                {"path_disjoint", c.path_disjoint},
                                {"agree", to_string(c.agree)},
                                {"detail", c.detail}});
  }
  j["notes"] = r.notes;
  j["verdict"] = to_string(r.verdict);
  if (!r.rerun.empty()) j["rerun"] = r.rerun;
  return j;
}

json to_json(const ReportSettings& s) {
  json j;
  j["seed"] = s.seed;
  j["bound"] = s.bound < 0 ? json("default") : json(s.bound);
  j["retries"] = s.retries;
  j["window_lo"] = s.window_lo ? json(*s.window_lo) : json("default");
  j["window_hi"] = s.window_hi ? json(*s.window_hi) : json("default");
  return j;
}

Summary summarize(const std::vector<CheckReport>& reports) {
  Summary s;
  for (const auto& r : reports) {
    switch (r.verdict) {
      case Verdict::Pass: ++s.pass; break;
      case Verdict::Fail: ++s.fail; break;
      case Verdict::HypothesisNotMet: ++s.hypothesis_not_met; break;
      case Verdict::Undetermined: ++s.undetermined; break;
    }
  }
  return s;
}

int exit_code(const Summary& s) {
  if (s.fail > 0) return 1;
  if (s.undetermined > 0) return 2;
  return 0;
}

std::string emit_report(std::vector<CheckReport> reports, const ReportSettings& settings) {
  std::stable_sort(reports.begin(), reports.end(),
                   [](const CheckReport& a, const CheckReport& b) { return a.sort_key() < b.sort_key(); });
  json j;
  j["schema"] = "linkhom-report/1";
  j["settings"] = to_json(settings);
  j["checks"] = json::array();
  for (const auto& r : reports) j["checks"].push_back(to_json(r));
  Summary s = summarize(reports);
  j["summary"] = {{"pass", s.pass},
                  {"fail", s.fail},
                  {"hypothesis-not-met", s.hypothesis_not_met},
                  {"undetermined", s.undetermined},
                  {"exit_code", exit_code(s)}};
  return j.dump(2) + "\n";
}

}  // namespace linkhom
