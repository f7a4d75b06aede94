#include <random>
#include <set>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "linkhom/errors.hpp"
#include "linkhom/harness/session.hpp"
#include "linkhom/kernel/parse.hpp"

using namespace linkhom;
using nlohmann::json;

namespace {

int error_line(const std::string& text) {
  try {
    parse_session(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

std::string error_text(const std::string& text) {
  try {
    Workspace::build(parse_session(text));
  } catch (const std::exception& e) {
    return e.what();
  }
  return {};
}

// Random homogeneous polynomial text of degree d in the given variables.
std::string random_poly(const std::vector<std::string>& vars, int d, std::mt19937_64& rng) {
  std::string out;
  const int terms = 1 + static_cast<int>(rng() % 3);
  for (int t = 0; t < terms; ++t) {
    long c = static_cast<long>(rng() % 9) - 4;
    if (c == 0) c = 1;
    out += (t == 0 ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ")) + std::to_string(std::abs(c));
    int left = d;
    for (std::size_t v = 0; v < vars.size(); ++v) {
      int e = v + 1 == vars.size() ? left : static_cast<int>(rng() % (left + 1));
      left -= e;
      if (e > 0) out += "*" + vars[v] + (e > 1 ? "^" + std::to_string(e) : "");
    }
  }
  return out;
}

std::string random_script(std::mt19937_64& rng) {
  const std::vector<std::string> all = {"x", "y", "z"};
  std::vector<std::string> vars(all.begin(), all.begin() + 1 + static_cast<long>(rng() % 3));
  std::string field = rng() % 2 ? "QQ" : "GF(101)";
  std::string s = "ring A = " + field + "[" + vars[0];
  for (std::size_t i = 1; i < vars.size(); ++i) s += ", " + vars[i];
  s += "]";
  if (rng() % 2) s += "/(" + random_poly(vars, 2, rng) + ")";
  s += ";\n";
  s += "ring B = A/(" + random_poly(vars, 2, rng) + ", " + random_poly(vars, 3, rng) + ");\n";
  s += "ideal I = A (" + random_poly(vars, 1, rng) + ");\n";
  s += "module M = coker A [[" + random_poly(vars, 1, rng) + ", " + random_poly(vars, 2, rng) + "]] gens [" +
       std::to_string(rng() % 3) + "];\n";
  s += "module N = ideal_quotient I;\n";
  s += "module P = sum M N;\n";
  s += "module Q = syzygy P " + std::to_string(rng() % 3) + ";\n";
  s += "module T = twist Q " + std::to_string(static_cast<int>(rng() % 5) - 2) + ";\n";
  s += "module L = lambda T;\n";
  s += "module U = base_change L B;\n";
  s += "semidualizing C = free A [0];\n";
  s += "set seed = " + std::to_string(rng() % 1000) + ";\n";
  s += "check g3_depth_formula L C;\n";
  s += "check thm_th5 M C " + std::to_string(1 + rng() % 3) + ";\n";
  return s;
}

SessionResult run_small(const std::string& text, const SettingsOverride& over = {}) {
  return run_script(text, over);
}

constexpr const char* kR1 = "ring R1 = QQ[x]/(x^2);\nmodule k = residue R1;\nsemidualizing C = free R1 [0];\n";

}  // namespace

TEST_CASE("grammar examples") {
  SessionScript s = parse_session(
      "ring R2 = QQ[x,y]/(x*y);\n"
      "module M = coker R2 [[x]] gens [0];\n"
      "check MS_linkage M;\n");
  REQUIRE(s.statements.size() == 3);
  CHECK(std::holds_alternative<RingDecl>(s.statements[0].body));
  const auto& m = std::get<ModuleDecl>(s.statements[1].body);
  CHECK(m.expr.op == ModuleOp::Coker);
  CHECK(m.expr.rows.size() == 1);
  CHECK(std::get<CheckStmt>(s.statements[2].body).id == "MS_linkage");
  Workspace ws = Workspace::build(s);
  CHECK(ws.module("M").gen_degs() == std::vector<int>{0});
  CHECK(ws.module("M").relations().col_degs == std::vector<int>{1});
}

TEST_CASE("catalog script round-trips through the printer") {
  SessionScript s = parse_session(catalog_source());
  CHECK(parse_session(pretty_print(s)) == s);
  CHECK(pretty_print(parse_session(pretty_print(s))) == pretty_print(s));
}

TEST_CASE("random scripts round-trip through the printer") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 60; ++trial) {
    std::string text = random_script(rng);
    CAPTURE(text);
    SessionScript s = parse_session(text);
    CHECK(parse_session(pretty_print(s)) == s);
  }
}

TEST_CASE("parse errors carry the line") {
  CHECK(error_line("ring R = QQ[x];\nmodule M = residue T;\n") == 2);
  CHECK(error_line("ring R = QQ[x];\nmodule M = residue R;\nmodule M = residue R;\n") == 3);
  CHECK(error_line("module M = residue R;\nring R = QQ[x];\n") == 1);
  CHECK(error_line("ring R = QQ[x];\nideal I = R (x);\ncheck MS_linkage I;\n") == 3);
  CHECK(error_line("ring R = QQ[x];\nmodule M = residue R;\n\ncheck MS_linkage M M;\n") == 4);
  CHECK(error_line("ring R = QQ[x];\nmodule M = residue R;\ncheck no_such_check M;\n") == 3);
  CHECK(error_line("ring R = GF(100)[x];\n") == 1);
  CHECK(error_line("ring R = QQ[x,x];\n") == 1);
  CHECK(error_line("ring R = QQ[x];\nmodule M = coker R [[x], [x, x]] gens [0, 0];\n") == 2);
  CHECK(error_line("ring R = QQ[x];\nset colour = 3;\n") == 2);
  CHECK(error_line("ring R = QQ[x]\nmodule M = residue R;\n") == 2);
}

TEST_CASE("inhomogeneous rings are rejected") {
  std::string msg = error_text("ring P = QQ[x]/(x^2 - x);\n");
  CHECK(msg.find("semiperfect") != std::string::npos);
  msg = error_text("ring P = QQ[x,y];\nideal I = P (x - y^2);\n");
  CHECK(msg.find("homogeneous") != std::string::npos);
  CHECK_THROWS_AS(Workspace::build(parse_session("ring Z = QQ[x]/(1);\n")), InputError);
}

TEST_CASE("evaluation errors point at the statement") {
  try {
    Workspace::build(parse_session("ring R = QQ[x,y];\n\nring P = QQ[x]/(x + 1);\n"));
    FAIL("expected an error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("empty report") {
  ReportSettings settings;
  json j = json::parse(emit_report({}, settings));
  CHECK(j["checks"] == json::array());
  CHECK(j["schema"] == "linkhom-report/1");
  CHECK(j.contains("settings"));
  CHECK(exit_code(summarize({})) == 0);
}

TEST_CASE("exit codes") {
  Summary s;
  s.pass = 3;
  s.hypothesis_not_met = 2;
  CHECK(exit_code(s) == 0);
  s.undetermined = 1;
  CHECK(exit_code(s) == 2);
  s.fail = 1;
  CHECK(exit_code(s) == 1);
}

TEST_CASE("MS linkage of k over R1 passes") {
  SessionResult r = run_small(std::string(kR1) + "check MS_linkage k;\n");
  REQUIRE(r.reports.size() == 1);
  CHECK(r.reports[0].verdict == Verdict::Pass);
  CHECK(r.exit_code == 0);
}

TEST_CASE("a free module does not meet the hypotheses") {
  SessionResult r = run_small(std::string(kR1) +
                              "module F = free R1 [0, 1];\n"
                              "check prop_3_2 F C;\n"
                              "check MS_linkage F;\n");
  REQUIRE(r.reports.size() == 2);
  const CheckReport& p = r.reports[0];
  const CheckReport& ms = r.reports[1];
  CHECK(p.verdict == Verdict::HypothesisNotMet);
  // No hypotheses here; both sides are false for F.
  CHECK(ms.verdict == Verdict::Pass);
  CHECK(ms.sides.at(0).value == "false");
  CHECK(r.exit_code == 0);
}

TEST_CASE("a pass report carries both Hilbert tables") {
  SessionResult r = run_small(
      "ring S2 = QQ[x,y];\nmodule k = residue S2;\nmodule M = syzygy k 1;\n"
      "semidualizing C = free S2 [0];\ncheck thm_t4 M C;\n");
  REQUIRE(r.reports.size() == 1);
  CHECK(r.reports[0].verdict == Verdict::Pass);
  json j = json::parse(r.json);
  const json& sides = j["checks"][0]["conclusion_sides"];
  int tables = 0;
  for (const auto& s : sides) {
    if (s["value"].is_object() && s["value"].contains("hilbert")) ++tables;
  }
  CHECK(tables >= 2);
  bool found = false;
  for (const auto& c : j["checks"][0]["comparisons"]) {
    if (c["relation"] == "equal" && c["detail"] == "1 / 1") found = true;
  }
  CHECK(found);
}

TEST_CASE("a fail report embeds a runnable snippet") {
  Workspace ws = Workspace::build(parse_session(std::string(kR1) +
                                                "module U = free R1 [0];\n"
                                                "module O = syzygy k 1;\n"
                                                "set bound = 4;\n"
                                                "check g3_depth_formula O C;\n"));
  CheckStmt stmt = ws.checks().at(0);
  std::string snippet = ws.rerun_snippet(stmt);
  CHECK(snippet.find("module U") == std::string::npos);
  CHECK(snippet.find("set bound = 4;") != std::string::npos);
  SessionScript again = parse_session(snippet);
  CHECK(Workspace::build(again).checks().size() == 1);

  CheckReport fake = run_check(ws, stmt);
  fake.verdict = Verdict::Fail;
  fake.rerun = snippet;
  json j = json::parse(emit_report({fake}, ws.settings()));
  CHECK(j["checks"][0]["verdict"] == "fail");
  CHECK(j["checks"][0]["rerun"] == snippet);
}

TEST_CASE("reports are ordered by check id and input hash") {
  SessionResult r = run_small(std::string(kR1) +
                              "module O = syzygy k 1;\n"
                              "check seq_2_3_2 k C;\ncheck MS_linkage O;\ncheck MS_linkage k;\n");
  json j = json::parse(r.json);
  REQUIRE(j["checks"].size() == 3);
  CHECK(j["checks"][0]["check_id"] == "MS_linkage");
  CHECK(j["checks"][2]["check_id"] == "seq_2_3_2");
  CHECK(j["checks"][0]["inputs"][0]["hash"] <= j["checks"][1]["inputs"][0]["hash"]);
}

TEST_CASE("equal inputs give byte-identical reports") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 5; ++trial) {
    std::string text = random_script(rng);
    CAPTURE(text);
    SessionResult a = run_small(text);
    SessionResult b = run_small(text);
    CHECK(a.json == b.json);
  }
}

TEST_CASE("command line settings override set statements") {
  SessionResult r = run_small(std::string(kR1) + "set seed = 5;\nset bound = 3;\ncheck MS_linkage k;\n",
                              SettingsOverride{std::uint64_t{9}, 2, std::nullopt});
  CHECK(r.settings.seed == 9);
  CHECK(r.settings.bound == 2);
}

TEST_CASE("every catalog check id has an instance") {
  SessionScript s = parse_session(catalog_source());
  std::set<std::string> ids;
  for (const auto& st : s.statements) {
    if (auto* c = std::get_if<CheckStmt>(&st.body)) ids.insert(c->id);
  }
  for (const auto& sig : check_signatures()) {
    CAPTURE(sig.id);
    CHECK(ids.count(sig.id) == 1);
  }
}

TEST_CASE("catalog verdicts do not depend on the seed") {
  SessionResult base = run_catalog();
  CHECK(base.summary.fail == 0);
  CHECK(base.summary.undetermined == 0);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    SessionResult r = run_catalog(SettingsOverride{seed, std::nullopt, std::nullopt});
    REQUIRE(r.reports.size() == base.reports.size());
    for (std::size_t i = 0; i < r.reports.size(); ++i) {
      CAPTURE(r.reports[i].check_id);
      CHECK(r.reports[i].verdict == base.reports[i].verdict);
    }
  }
}

TEST_CASE("a bound of one degrades but never fails") {
  SessionResult r = run_catalog(SettingsOverride{std::nullopt, 1, std::nullopt});
  CHECK(r.summary.fail == 0);
  CHECK(r.summary.undetermined > 0);
  CHECK(r.exit_code == 2);
}
