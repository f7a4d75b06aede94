#include "linkhom/harness/registry.hpp"

#include <algorithm>
#include <chrono>
#include <map>

#include "context.hpp"
#include "linkhom/errors.hpp"
#include "linkhom/harness/workspace.hpp"

namespace linkhom {

const char* to_string(ArgKind k) {
  switch (k) {
    case ArgKind::Module: return "module";
    case ArgKind::Semidualizing: return "semidualizing";
    case ArgKind::Ideal: return "ideal";
    case ArgKind::Int: return "int";
  }
  return "?";
}

namespace {

using K = ArgKind;

struct Entry {
  CheckSignature sig;
  void (*run)(checks::Ctx&);
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table = [] {
    std::vector<Entry> t = {
        {{"MS_linkage", {K::Module}, {"M"},
          "M is horizontally linked iff M is stable and Ext^1(Tr M, R) = 0, equivalently M is stable and a syzygy module"},
         checks::ms_linkage},
        {{"ms_prop1_ideal", {K::Ideal, K::Ideal}, {"c", "I"},
          "with J = c : I, the ideals I and J are linked by c iff R'/I = lambda(R'/J) over R' = R/c"},
         checks::ms_prop1_ideal},
        {{"g3_depth_formula", {K::Module, K::Semidualizing}, {"M", "C"},
          "if G_C-dim M is finite then G_C-dim M = depth R - depth M"},
         checks::g3_depth_formula},
        {{"seq_2_3_2", {K::Module, K::Semidualizing}, {"M", "C"},
          "0 -> Ext^1(Tr_C M, C) -> M -> Hom(Hom(M, C), C) -> Ext^2(Tr_C M, C) -> 0 is exact"},
         checks::seq_2_3_2},
        {{"rem_2_10_i", {K::Module, K::Semidualizing}, {"M", "C"}, "Tr M (x) C = Tr_C M"}, checks::rem_2_10_i},
        {{"rem_2_10_ii", {K::Module, K::Semidualizing}, {"M", "C"},
          "if the stable Hom(M, C) vanishes then lambda_C M = lambda M (x) C and "
          "Ext^i_IC(lambda M, R) = Ext^i(lambda_C M, C) = Ext^(i+1)(Tr_C M, C) for i > 0"},
         checks::rem_2_10_ii},
        {{"lemma_l4", {K::Module, K::Semidualizing}, {"M", "C"},
          "there is an exact sequence 0 -> M -> Tr_C Tr_C M -> X -> 0 with G_C-dim X = 0"},
         checks::lemma_l4},
        {{"thm_2_14_chain", {K::Module, K::Semidualizing, K::Int}, {"M", "C", "n"},
          "Ext^i(Tr_C M, C) = 0 for 1 <= i <= n implies M is an n-th C-syzygy, which implies M satisfies S~_n; "
          "S~_n implies the vanishing when G_C-dim M_p is finite for depth R_p <= n - 1"},
         checks::thm_2_14_chain},
        {{"rem_2_15_ii", {K::Module, K::Semidualizing}, {"M", "C"},
          "if Tr M is in A_C then Ext^i(Tr_C M, C) = Ext^i(Tr M (x) C, C) = Ext^i(Tr M, R) for i >= 0"},
         checks::rem_2_15_ii},
        {{"lemma_2_16", {K::Module, K::Semidualizing}, {"M", "C"},
          "if M is in A_C then depth M = depth M (x) C and dim M = dim M (x) C"},
         checks::lemma_2_16},
        {{"prop_3_2", {K::Module, K::Semidualizing}, {"M", "C"},
          "for M horizontally linked with stable Hom(M, C) = 0: G_C-dim M = 0 iff Ext^i(M, C) = 0 = "
          "Ext^i_IC(lambda M, R) for i > 0; M satisfies S~_n iff Ext^i_IC(lambda M, R) = 0 for 0 < i < n when "
          "G_C-dim M_p is finite for depth R_p <= n - 1"},
         checks::prop_3_2},
        {{"prop_th3", {K::Module, K::Semidualizing}, {"M", "C"},
          "for M horizontally linked with 0 < G_C-dim M < inf and stable Hom(M, C) = 0: depth M = rgr_IC(lambda M) "
          "iff the maximal ideal is associated to Ext^t_IC(lambda M, R), t = rgr_IC(lambda M)"},
         checks::prop_th3},
        {{"prop_p1", {K::Module, K::Semidualizing}, {"M", "C"},
          "for M horizontally linked of finite G_C-dimension with stable Hom(M, C) = 0, rgr_IC(lambda M) is the "
          "infimum of depth M_p over the primes where G_C-dim M_p != 0: it is infinite iff G_C-dim M = 0, and "
          "otherwise at most depth M"},
         checks::prop_p1},
        {{"thm_t4", {K::Module, K::Semidualizing}, {"M", "C"},
          "over a ring of depth d >= 2, for M horizontally linked with stable Hom(M, C) = 0 and G_C-dim M_p = 0 on "
          "the punctured spectrum: Ext^i_IC(lambda M, R) = H^i_m(M) for 0 < i < d, and rgr_IC(lambda M) = depth M "
          "when 0 < G_C-dim M < inf"},
         checks::thm_t4},
        {{"lemma_l6", {K::Module, K::Semidualizing}, {"M", "C"},
          "for M horizontally linked and id C_p finite in depth 0: stable Hom(M, C) = 0 iff lambda M (x) C "
          "satisfies S~_1"},
         checks::lemma_l6},
        {{"thm_theorem3", {K::Ideal, K::Ideal, K::Semidualizing}, {"I", "J", "C"},
          "for I, J linked by the zero ideal, id C_p finite in depth 0 and C/JC satisfying S~_1: G_C-dim R/I = 0 iff "
          "Ext^i(R/I, C) = 0 = Ext^i_IC(R/J, R) for i > 0; R/I satisfies S~_n iff Ext^i_IC(R/J, R) = 0 for "
          "0 < i < n; Ext^i_IC(R/J, R) = H^i_m(R/I) for 0 < i < d"},
         checks::thm_theorem3},
        {{"thm_th1", {K::Ideal, K::Ideal, K::Ideal, K::Semidualizing}, {"a", "I", "J", "C"},
          "for a G_C-perfect ideal a, S = R/a, K = Ext^grade(a)(S, C) and I, J linked by a with K/JK satisfying "
          "S~_1: R/I is G_C-perfect iff Ext^i_S(R/I, K) = 0 = Ext^i_IK(R/J, S) for i > 0; S~_n iff "
          "Ext^i_IK(R/J, S) = 0 for 0 < i < n; Ext^i_IK(R/J, S) = H^i_m(R/I) for 0 < i < depth S"},
         checks::thm_th1},
        {{"golod_g1_g2", {K::Ideal, K::Module, K::Semidualizing}, {"a", "M", "C"},
          "for a G_C-perfect ideal a of grade m and K = Ext^m(R/a, C): Ext^i_(R/a)(M, K) = Ext^(m+i)(M, C) for "
          "R/a-modules M, K is semidualizing over R/a, and G_C-dim M = m + G_K-dim M"},
         checks::golod_g1_g2},
        {{"lemma_l1", {K::Ideal, K::Module, K::Semidualizing}, {"a", "M", "C"},
          "for a G_C-perfect ideal a and M horizontally linked over R/a: grade M = grade a"},
         checks::lemma_l1},
        {{"thm_t6", {K::Ideal, K::Module, K::Module, K::Semidualizing}, {"a", "M", "N", "C"},
          "for a G_C-perfect ideal a, K = Ext^grade(a)(R/a, C), M linked to N by a and stable Hom(M, K) = 0: M is "
          "G_C-perfect iff Ext^i_IK(N, R/a) = 0 = Ext^i_(R/a)(M, K) for i >= 1; S~_n iff Ext^i_IK(N, R/a) = 0 for "
          "0 < i < n; Ext^i_IK(N, R/a) = H^i_m(M) for 0 < i < depth R/a"},
         checks::thm_t6},
        {{"thm_th5", {K::Module, K::Semidualizing, K::Int}, {"M", "C", "n"},
          "for M in A_C: Ext^i(Tr M, C) = 0 for 1 <= i <= n iff Ext^i(Tr M, R) = 0 for 1 <= i <= n, which implies "
          "M is an n-th syzygy; the converse holds when G-dim M_p is finite for depth R_p <= n - 2"},
         checks::thm_th5},
        {{"cor_cor7", {K::Module, K::Semidualizing, K::Int}, {"M", "C", "n"},
          "for M stable in A_C with G-dim M_p finite for depth R_p <= n - 2: M is an n-th syzygy iff M is "
          "horizontally linked and Ext^i(lambda M, C) = 0 for 0 < i < n"},
         checks::cor_cor7},
        {{"thm_t7", {K::Module, K::Semidualizing}, {"M", "C"},
          "for M horizontally linked of finite G_C-dimension with lambda M in A_C, equivalent: G-dim M = 0; "
          "G-dim lambda M = 0; lambda M satisfies S~_n for some n > depth R - depth M; G_C-dim M = 0"},
         checks::thm_t7},
        {{"lemma_l5", {K::Module, K::Module, K::Semidualizing}, {"M", "N", "C"},
          "for N in B_C: 0 -> Ext^1(Tr_C M, N) -> M (x) Hom(C, N) -> Hom(Hom(M, C), N) -> Ext^2(Tr_C M, N) -> 0 "
          "is exact"},
         checks::lemma_l5},
        {{"thm_t5", {K::Module, K::Semidualizing, K::Int}, {"M", "C", "n"},
          "over a Cohen-Macaulay ring, for M of finite G_C-dimension, equivalent: S~_n; n-th omega-syzygy; n-th "
          "C-syzygy; Ext^i(Tr_C M, omega) = 0, Ext^i(Tr_C M, C) = 0, Ext^i(Tr_omega M, omega) = 0 for 1 <= i <= n"},
         checks::thm_t5},
        {{"cor_cor2", {K::Module, K::Semidualizing, K::Int}, {"M", "C", "n"},
          "over a Cohen-Macaulay ring of dimension d, for M stable of finite G_C-dimension with stable Hom(M, C) = 0: "
          "M satisfies S~_n iff M is horizontally linked and H^i_m(lambda M (x) C) = 0 for d - n < i < d"},
         checks::cor_cor2},
        {{"thm_cor6", {K::Module, K::Semidualizing}, {"M", "C"},
          "over a Cohen-Macaulay ring, for M horizontally linked of finite G_C-dimension with lambda M in A_C, "
          "equivalent: M is MCM; lambda M is MCM; M satisfies S_n for some n > depth R - depth lambda M; lambda M "
          "satisfies S_n for some n > depth R - depth M"},
         checks::thm_cor6},
        {{"thm_t8", {K::Module, K::Semidualizing}, {"M", "C"},
          "over a Cohen-Macaulay ring of dimension d >= 2, for M horizontally linked with G_C-dim M_p finite on the "
          "punctured spectrum and lambda M in A_C: M is generalized CM iff lambda M is; then H^i_m(M) = "
          "Ext^i(lambda M, R) and H^i_m(lambda M) = Ext^i(M, R) for 0 < i < d, and depth M = rgr(lambda M) "
          "unless M is MCM"},
         checks::thm_t8},
        {{"cor_cor9", {K::Ideal, K::Module, K::Module, K::Semidualizing}, {"c", "M", "N", "C"},
          "over a Cohen-Macaulay ring, for a G_C-perfect ideal c, K = Ext^grade(c)(R/c, C), M linked to N by c, "
          "G_C-dim M finite and N in A_K: M is CM iff N is CM iff the Serre conditions hold; if dim R/c >= 2, M is "
          "generalized CM iff N is, and then H^i_m(M) = Ext^i_(R/c)(N, R/c) for 0 < i < d; K = R/c when K is "
          "cyclic"},
         checks::cor_cor9},
    };
    std::sort(t.begin(), t.end(), [](const Entry& a, const Entry& b) { return a.sig.id < b.sig.id; });
    return t;
  }();
  return table;
}

}  // namespace

const std::vector<CheckSignature>& check_signatures() {
  static const std::vector<CheckSignature> sigs = [] {
    std::vector<CheckSignature> out;
    for (const auto& e : entries()) out.push_back(e.sig);
    return out;
  }();
  return sigs;
}

const CheckSignature* find_check(std::string_view id) {
  for (const auto& s : check_signatures()) {
    if (s.id == id) return &s;
  }
  return nullptr;
}

CheckReport run_check(const Workspace& ws, const CheckStmt& stmt) {
  const Entry* entry = nullptr;
  for (const auto& e : entries()) {
    if (e.sig.id == stmt.id) entry = &e;
  }
  if (!entry) throw InputError("unknown check '" + stmt.id + "'");
  if (stmt.args.size() != entry->sig.args.size()) throw InputError("wrong number of arguments for " + stmt.id);

  CheckReport r;
  r.check_id = stmt.id;
  r.statement = entry->sig.statement;
  for (std::size_t i = 0; i < stmt.args.size(); ++i) {
    const CheckArg& a = stmt.args[i];
    if (a.is_int) {
      r.inputs.push_back(InputRecord{entry->sig.arg_names[i] + "=" + std::to_string(a.value), "int",
                                     fnv_hex(std::to_string(a.value))});
    } else {
      r.inputs.push_back(InputRecord{a.name, ws.kind(a.name), ws.hash(a.name)});
    }
  }

  const auto start = std::chrono::steady_clock::now();
  bool errored = false;
  try {
    checks::Ctx ctx(ws, stmt, r);
    entry->run(ctx);
  } catch (const std::exception& ex) {
    errored = true;
    r.notes.push_back(std::string("error: ") + ex.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.verdict = decide(r);
  if (errored && r.verdict == Verdict::Pass) r.verdict = Verdict::Undetermined;
  if (r.verdict == Verdict::Fail) r.rerun = ws.rerun_snippet(stmt);
  return r;
}

}  // namespace linkhom
