#include "linkhom/harness/session.hpp"

#include <algorithm>

namespace linkhom {

namespace {

// One copy per coefficient field: @ is replaced by the ring name suffix, FIELD by QQ or GF(101).
constexpr std::string_view kBlock = R"(ring S2@ = FIELD[x,y];
ring S3@ = FIELD[x,y,z];
ring R1@ = FIELD[x]/(x^2);
ring R2@ = S2@/(x*y);
ring R3@ = S2@/(x^2, x*y, y^2);

semidualizing C1@ = free R1@ [0];
semidualizing C2@ = free R2@ [0];
semidualizing C3@ = free R3@ [0];
semidualizing CS2@ = free S2@ [0];
semidualizing CS3@ = free S3@ [0];
semidualizing W1@ = canonical R1@;
semidualizing W3@ = canonical R3@;
semidualizing KS2@ = residue S2@;

module k1@ = residue R1@;
module k2@ = residue R2@;
module a2@ = ideal_quotient R2@ (x);
module b2@ = ideal_quotient R2@ (y);
module k3@ = residue R3@;
module w3@ = canonical R3@;
module kS2@ = residue S2@;
module m2@ = syzygy kS2@ 1;
module kS3@ = residue S3@;
module m3@ = syzygy kS3@ 1;
module n3@ = syzygy kS3@ 2;

ideal c2@ = S2@ (x*y);
ideal i2@ = S2@ (x);
ideal j2@ = S2@ (y);
ideal x2@ = R2@ (x);
ideal y2@ = R2@ (y);
)";

struct Pair {
  const char* m;
  const char* c;
};

constexpr Pair kPairs[] = {{"k1", "C1"}, {"k1", "W1"}, {"k2", "C2"},  {"a2", "C2"},  {"k3", "C3"},  {"k3", "W3"},
                           {"w3", "C3"}, {"kS2", "CS2"}, {"m2", "CS2"}, {"kS3", "CS3"}, {"m3", "CS3"}, {"n3", "CS3"}};

constexpr const char* kPairChecks[] = {"g3_depth_formula", "seq_2_3_2",  "rem_2_10_i",  "rem_2_10_ii", "lemma_l4",
                                       "rem_2_15_ii",      "lemma_2_16", "prop_3_2",    "prop_th3",    "prop_p1",
                                       "thm_t4",           "lemma_l6",   "thm_t7",      "thm_cor6",    "thm_t8"};

constexpr const char* kCountChecks[] = {"thm_2_14_chain", "thm_th5", "cor_cor7", "thm_t5", "cor_cor2"};

std::string block(const std::string& suffix, const std::string& field) {
  std::string out;
  for (char ch : kBlock) {
    if (ch == '@') {
      out += suffix;
    } else {
      out += ch;
    }
  }
  for (std::size_t at = out.find("FIELD"); at != std::string::npos; at = out.find("FIELD", at)) {
    out.replace(at, 5, field);
  }
  auto check = [&](std::string line) { out += "check " + line + ";\n"; };
  auto s = [&](const char* n) { return std::string(n) + suffix; };
  out += "\n";
  for (const char* m : {"k1", "k2", "a2", "m2"}) check("MS_linkage " + s(m));
  check("ms_prop1_ideal " + s("c2") + " " + s("i2"));
  for (const char* id : kPairChecks) {
    for (const Pair& p : kPairs) check(std::string(id) + " " + s(p.m) + " " + s(p.c));
  }
  for (const char* id : kCountChecks) {
    for (const Pair& p : kPairs) {
      for (int n : {1, 2}) check(std::string(id) + " " + s(p.m) + " " + s(p.c) + " " + std::to_string(n));
    }
  }
  check("thm_theorem3 " + s("x2") + " " + s("y2") + " " + s("C2"));
  check("thm_th1 " + s("c2") + " " + s("i2") + " " + s("j2") + " " + s("CS2"));
  for (const char* m : {"a2", "k2"}) {
    check("golod_g1_g2 " + s("c2") + " " + s(m) + " " + s("CS2"));
    check("lemma_l1 " + s("c2") + " " + s(m) + " " + s("CS2"));
  }
  check("thm_t6 " + s("c2") + " " + s("a2") + " " + s("b2") + " " + s("CS2"));
  for (const Pair& p : kPairs) check("lemma_l5 " + s(p.m) + " " + s(p.m) + " " + s(p.c));
  check("lemma_l5 " + s("a2") + " " + s("b2") + " " + s("C2"));
  check("cor_cor9 " + s("c2") + " " + s("a2") + " " + s("b2") + " " + s("CS2"));
  return out;
}

}  // namespace

std::vector<CheckReport> run_checks(const Workspace& ws) {
  std::vector<CheckReport> out;
  for (const CheckStmt& c : ws.checks()) out.push_back(run_check(ws, c));
  return out;
}

SessionResult run_session(const SessionScript& script, const SettingsOverride& over) {
  Workspace ws = Workspace::build(script, over);
  SessionResult r;
  r.settings = ws.settings();
  r.reports = run_checks(ws);
  r.summary = summarize(r.reports);
  r.exit_code = exit_code(r.summary);
  r.json = emit_report(r.reports, r.settings);
  return r;
}

SessionResult run_script(std::string_view text, const SettingsOverride& over) {
  return run_session(parse_session(text), over);
}

const std::string& catalog_source() {
  static const std::string text = block("", "QQ") + "\n" + block("p", "GF(101)");
  return text;
}

SessionResult run_catalog(const SettingsOverride& over) { return run_script(catalog_source(), over); }

}  // namespace linkhom
