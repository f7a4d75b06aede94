// Acceptance gate: one PASS/FAIL line per criterion. With an argument N only criterion N runs.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "linkhom/harness/session.hpp"
#include "linkhom/kernel/parse.hpp"
#include "linkhom/modules/homological.hpp"
#include "linkhom/modules/iso.hpp"
#include "linkhom/theory/gclass.hpp"
#include "linkhom/theory/linkage.hpp"

using namespace linkhom;
using nlohmann::json;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Catalog {
  Workspace ws;
  std::vector<std::string> rings;
  std::vector<std::string> modules;
  std::vector<std::string> semis;
};

const Catalog& catalog() {
  static const Catalog cat = [] {
    SessionScript s = parse_session(catalog_source());
    Catalog c{Workspace::build(s), {}, {}, {}};
    for (const auto& st : s.statements) {
      if (auto* r = std::get_if<RingDecl>(&st.body)) c.rings.push_back(r->name);
      if (auto* m = std::get_if<ModuleDecl>(&st.body)) (m->semidualizing ? c.semis : c.modules).push_back(m->name);
    }
    return c;
  }();
  return cat;
}

// Certified semidualizing modules of the catalog paired with the modules over the same ring.
std::vector<std::pair<const FPModule*, const SemidualizingModule*>> pairs() {
  const Catalog& cat = catalog();
  std::vector<std::pair<const FPModule*, const SemidualizingModule*>> out;
  for (const auto& cn : cat.semis) {
    const SemidualizingModule& c = cat.ws.semidualizing(cn);
    if (!c.certificate.certified()) continue;
    for (const auto& mn : cat.modules) {
      const FPModule& m = cat.ws.module(mn);
      if (m.ring()->same_as(*c.module.ring())) out.push_back({&m, &c});
    }
  }
  return out;
}

Ring ring_of(const std::string& text, const std::string& name) {
  return Workspace::build(parse_session(text)).ring(name);
}

long long total(const FPModule& m) { return m.is_zero() ? 0 : m.hilbert_series().finite_table().total(); }

bool iso_yes(const FPModule& a, const FPModule& b, bool twist) {
  if (a.is_zero() && b.is_zero()) return true;
  IsoOptions o;
  o.allow_twist = twist;
  return is_isomorphic(a, b, o).status == IsoStatus::Yes;
}

void require(Outcome& o, bool cond, const std::string& what) {
  if (!cond && o.ok) {
    o.ok = false;
    o.detail = what;
  }
}

Outcome self_linkage() {
  Outcome o;
  Workspace ws = Workspace::build(parse_session("ring R1 = QQ[x]/(x^2);\nmodule k = residue R1;\n"));
  const FPModule& k = ws.module("k");
  LinkageCertificate cert = certify_horizontal_linkage(k, ws.iso_options(true));
  require(o, cert.linked(), "certify_horizontal_linkage(k) is not Linked");
  require(o, iso_yes(lambda(lambda(k)), k, true), "lambda^2 k is not k up to twist");
  require(o, ext_module(1, transpose(k), FPModule::free(k.ring(), {0})).is_zero(), "Ext^1(Tr k, R1) != 0");
  SessionResult r = run_script("ring R1 = QQ[x]/(x^2);\nmodule k = residue R1;\ncheck MS_linkage k;\n");
  require(o, r.reports.at(0).verdict == Verdict::Pass, "MS_linkage k did not pass");
  o.detail = o.ok ? "k over QQ[x]/(x^2) is linked, lambda^2 k = k, Ext^1(Tr k, R1) = 0" : o.detail;
  return o;
}

Outcome ideal_linkage() {
  Outcome o;
  Workspace ws = Workspace::build(parse_session(
      "ring S2 = QQ[x,y];\nideal c = S2 (x*y);\nideal I = S2 (x);\nideal Y = S2 (y);\n"));
  IdealLink l = link_ideal(ws.ideal("c"), ws.ideal("I"));
  require(o, ideal_equal(l.J, ws.ideal("Y")), "J = " + to_string(l.J) + ", expected (y)");
  require(o, l.verified, "c : J != I");
  SessionResult r = run_script("ring S2 = QQ[x,y];\nideal c = S2 (x*y);\nideal I = S2 (x);\ncheck ms_prop1_ideal c I;\n");
  require(o, r.reports.at(0).verdict == Verdict::Pass, "ms_prop1_ideal did not pass");
  if (o.ok) o.detail = "(xy) : (x) = (y), (xy) : (y) = (x), ms_prop1_ideal passes";
  return o;
}

Outcome depth_formula() {
  Outcome o;
  int n = 0;
  for (auto [m, c] : pairs()) {
    GcDimension g = gc_dimension(*m, *c);
    if (!g.finite()) continue;
    ++n;
    const int expected = ring_depth(m->ring()) - depth(*m);
    require(o, g.value == expected,
            "G_C-dim " + std::to_string(g.value) + " != depth R - depth M = " + std::to_string(expected));
  }
  require(o, n >= 12, "only " + std::to_string(n) + " instances");
  if (o.ok) o.detail = std::to_string(n) + " instances with finite G_C-dimension";
  return o;
}

Outcome bidual_sequence() {
  Outcome o;
  int n = 0;
  for (auto [m, c] : pairs()) {
    const PolyRing& S = m->ring()->ambient();
    GradedMap theta = bidual_map(*m, c->module);
    Subquotient ker = kernel(theta);
    FPModule cok = cokernel(theta);
    FPModule tr = transpose_C(*m, *c);
    FPModule e1 = ext_module(1, tr, c->module);
    FPModule e2 = ext_module(2, tr, c->module);
    // 0 -> Ext^1 -> M -> M** -> Ext^2 -> 0, with Ext^1 = ker and Ext^2 = coker.
    require(o, iso_yes(ker.module, e1, false), "kernel is not Ext^1(Tr_C M, C)");
    require(o, iso_yes(cok, e2, false), "cokernel is not Ext^2(Tr_C M, C)");
    const HilbertSeries terms[] = {e1.hilbert_series(), m->hilbert_series(), theta.target.hilbert_series(),
                                   e2.hilbert_series()};
    for (int d = -8; d <= 12; ++d) {
      long long sum = terms[0].coefficient(d) - terms[1].coefficient(d) + terms[2].coefficient(d) -
                      terms[3].coefficient(d);
      require(o, sum == 0, "alternating sum " + std::to_string(sum) + " in degree " + std::to_string(d));
    }
    Matrix inc;
    inc.row_degs = m->gen_degs();
    inc.col_degs = ker.module.gen_degs();
    for (std::size_t j = 0; j < ker.module.ngens(); ++j) {
      inc.cols.push_back(ker.represent(S.embed(S.constant(1), static_cast<std::uint32_t>(j))));
    }
    GradedMap iota = make_map(ker.module, *m, inc);
    GradedMap pi = make_map(theta.target, cok, identity_matrix(S, theta.target.gen_degs()));
    require(o, is_zero_map(compose(theta, iota)), "Ext^1 -> M -> M** is not zero");
    require(o, is_zero_map(compose(pi, theta)), "M -> M** -> Ext^2 is not zero");
    ++n;
  }
  require(o, n >= 12, "only " + std::to_string(n) + " instances");
  if (o.ok) o.detail = std::to_string(n) + " (M, C) pairs, degrees -8..12";
  return o;
}

Outcome transpose_tensor() {
  Outcome o;
  int n = 0;
  for (auto [m, c] : pairs()) {
    require(o, iso_yes(tensor_module(transpose(*m), c->module), transpose_C(*m, *c), false),
            "Tr M (x) C and Tr_C M are not isomorphic");
    ++n;
  }
  if (o.ok) o.detail = std::to_string(n) + " (M, C) pairs";
  return o;
}

Outcome relative_ext_consistency() {
  Outcome o;
  const Catalog& cat = catalog();
  int n = 0;
  for (const auto& cn : cat.semis) {
    const SemidualizingModule& c = cat.ws.semidualizing(cn);
    if (!c.certificate.certified()) continue;
    std::vector<const FPModule*> in_a;
    for (const auto& mn : cat.modules) {
      const FPModule& m = cat.ws.module(mn);
      if (m.ring()->same_as(*c.module.ring()) && in_auslander_class(m, c).certified()) in_a.push_back(&m);
    }
    for (const FPModule* m : in_a) {
      for (const FPModule* x : in_a) {
        for (int i = 0; i <= 3; ++i) {
          require(o, relative_ext(i, *m, *x, c).hilbert_series() == ext_module(i, *m, *x).hilbert_series(),
                  "tables differ at i = " + std::to_string(i));
        }
        ++n;
      }
    }
  }
  require(o, n > 0, "no instances");
  if (o.ok) o.detail = std::to_string(n) + " (M, N, C) triples, 0 <= i <= 3";
  return o;
}

Outcome local_cohomology_instance() {
  Outcome o;
  Workspace ws = Workspace::build(parse_session("ring S2 = QQ[x,y];\nmodule k = residue S2;\nmodule M = syzygy k 1;\n"));
  const FPModule& m = ws.module("M");
  SemidualizingModule c = free_semidualizing(m.ring());
  const long long rel = total(relative_ext(1, lambda(m), FPModule::free(m.ring(), {0}), c));
  const long long h = total(local_cohomology_dual(m, 1));
  require(o, rel == 1 && h == 1, "totals " + std::to_string(rel) + " and " + std::to_string(h));
  if (o.ok) o.detail = "Ext^1_IC(lambda M, R) and H^1_m(M) both of length 1";
  return o;
}

Outcome stable_hom_instance() {
  Outcome o;
  Workspace ws = Workspace::build(parse_session("ring R1 = QQ[x]/(x^2);\nmodule k = residue R1;\n"));
  const FPModule& k = ws.module("k");
  const long long a = total(stable_hom(k, k));
  const long long b = total(stable_hom_direct(k, k));
  require(o, a == 1 && b == 1, "lengths " + std::to_string(a) + " and " + std::to_string(b));
  if (o.ok) o.detail = "Tor route and direct route both give length 1";
  return o;
}

Outcome golod_instance() {
  Outcome o;
  Workspace ws = Workspace::build(
      parse_session("ring S2 = QQ[x,y];\nring R2 = S2/(x*y);\nideal a = S2 (x*y);\n"
                    "module A = ideal_quotient R2 (x);\nmodule k = residue R2;\n"));
  const Ring& s2 = ws.ring("S2");
  SemidualizingModule c = free_semidualizing(s2);
  GcPerfectData data = gc_perfect_ideal_data(ws.ideal("a"), c);
  require(o, data.grade == 1, "grade of (xy) is " + std::to_string(data.grade));
  for (const char* name : {"A", "k"}) {
    FPModule m = base_change(ws.module(name), data.quotient);
    FPModule m_s = restrict_scalars(m, s2);
    for (int i = 0; i <= 2; ++i) {
      require(o, ext_module(i, m, data.K).hilbert_series() == ext_module(1 + i, m_s, c.module).hilbert_series(),
              std::string("M = ") + name + ", i = " + std::to_string(i));
    }
    GolodReport rep = golod_functor_check(data, c, m, 2);
    require(o, rep.pass, std::string("golod_functor_check fails for ") + name);
  }
  if (o.ok) o.detail = "Ext^i_R2(M, K) and Ext^(1+i)_S2(M, S2) agree for M in {R2/(x), k}, i = 0..2";
  return o;
}

Outcome semidualizing_certification() {
  Outcome o;
  const Catalog& cat = catalog();
  int rings = 0;
  for (const auto& rn : cat.rings) {
    require(o, is_semidualizing(FPModule::free(cat.ws.ring(rn), {0})).certificate.certified(),
            "C = R not certified over " + rn);
    ++rings;
  }
  Ring r3 = ring_of("ring R3 = QQ[x,y]/(x^2, x*y, y^2);\n", "R3");
  SemidualizingModule w = is_semidualizing(canonical_module(r3));
  require(o, w.certificate.certified(), "omega over R3 not certified");
  require(o, !iso_yes(w.module, FPModule::free(r3, {0}), true), "omega over R3 is free");
  Ring s2 = ring_of("ring S2 = QQ[x,y];\n", "S2");
  SemidualizingModule k = is_semidualizing(residue_field(s2));
  require(o, k.certificate.status == CertStatus::Refuted, "C = k over S2 not refuted");
  require(o, !k.certificate.evidence.empty(), "no witness for the refutation");
  if (o.ok) {
    o.detail = "C = R on " + std::to_string(rings) + " rings, omega over R3; k over S2 refuted at index " +
               std::to_string(k.certificate.refuted_index) + " (" + k.certificate.evidence.back() + ")";
  }
  return o;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_cli(const std::string& args) {
  std::string cmd = std::string(LINKHOM_BIN) + " " + args + " 2>/dev/null";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome registry_gate() {
  Outcome o;
  const std::string out = std::string(ACCEPTANCE_TMP) + "/catalog_gate.json";
  int code = run_cli("catalog --json " + out);
  require(o, code == 0, "linkhom catalog exited " + std::to_string(code));
  json j = json::parse(slurp(out));
  std::map<std::string, std::map<std::string, int>> counts;
  for (const auto& c : j["checks"]) counts[c["check_id"]][c["verdict"]]++;
  for (const auto& sig : check_signatures()) {
    require(o, counts[sig.id]["pass"] > 0, "no pass for " + sig.id);
    require(o, counts[sig.id]["fail"] == 0, "fail for " + sig.id);
    require(o, counts[sig.id]["undetermined"] == 0, "undetermined for " + sig.id);
  }
  if (o.ok) {
    o.detail = "exit 0, " + std::to_string(j["checks"].size()) + " checks, every one of " +
               std::to_string(check_signatures().size()) + " ids passes somewhere";
  }
  return o;
}

Outcome determinism() {
  Outcome o;
  const std::string a = std::string(ACCEPTANCE_TMP) + "/det_a.json";
  const std::string b = std::string(ACCEPTANCE_TMP) + "/det_b.json";
  run_cli("catalog --seed 7 --json " + a);
  run_cli("catalog --seed 7 --json " + b);
  const std::string ta = slurp(a);
  require(o, !ta.empty(), "empty report");
  require(o, ta == slurp(b), "reports differ");
  if (o.ok) o.detail = std::to_string(ta.size()) + " identical bytes";
  return o;
}

struct Criterion {
  const char* title;
  std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list = {
      {"self-linkage of k over R1", self_linkage},
      {"ideal linkage (xy) : (x) = (y) in S2", ideal_linkage},
      {"depth formula on the catalog", depth_formula},
      {"bidual exact sequence on the catalog", bidual_sequence},
      {"Tr M (x) C = Tr_C M on the catalog", transpose_tensor},
      {"relative Ext agrees with Ext on A_C", relative_ext_consistency},
      {"Ext^1_IC(lambda m, S2) and H^1_m(m) have length 1", local_cohomology_instance},
      {"stable Hom(k, k) over R1 has length 1", stable_hom_instance},
      {"Golod functor isomorphism for (xy) in S2", golod_instance},
      {"semidualizing certification", semidualizing_certification},
      {"linkhom catalog gate", registry_gate},
      {"byte-identical reports", determinism},
  };
  return list;
}

}  // namespace

int main(int argc, char** argv) {
  const auto& list = criteria();
  std::size_t first = 0;
  std::size_t last = list.size();
  if (argc > 1) {
    first = static_cast<std::size_t>(std::atoi(argv[1])) - 1;
    if (first >= list.size()) {
      std::cerr << "criteria are numbered 1.." << list.size() << "\n";
      return 2;
    }
    last = first + 1;
  }
  bool all = true;
  for (std::size_t i = first; i < last; ++i) {
    Outcome o;
    try {
      o = list[i].run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    all = all && o.ok;
    std::cout << "criterion " << (i + 1) << ": " << (o.ok ? "PASS" : "FAIL") << "  " << list[i].title << "  ["
              << o.detail << "]\n";
  }
  return all ? 0 : 1;
}
