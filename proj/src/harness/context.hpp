#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "linkhom/harness/registry.hpp"
#include "linkhom/harness/workspace.hpp"
#include "linkhom/modules/homological.hpp"
#include "linkhom/theory/gclass.hpp"
#include "linkhom/theory/linkage.hpp"
#include "linkhom/trace.hpp"

namespace linkhom::checks {

using nlohmann::json;

Tri tri(bool b);
Tri tri(const BoundedCertificate& c);
Tri tri_and(Tri a, Tri b);
std::string tri_word(Tri t);

class Ctx {
 public:
  Ctx(const Workspace& ws, const CheckStmt& stmt, CheckReport& report) : ws(ws), stmt(stmt), rep(report) {}

  const Workspace& ws;
  const CheckStmt& stmt;
  CheckReport& rep;

  const FPModule& mod(std::size_t i) const { return ws.module(stmt.args.at(i).name); }
  const SemidualizingModule& semi(std::size_t i) const { return ws.semidualizing(stmt.args.at(i).name); }
  const Ideal& ideal(std::size_t i) const { return ws.ideal(stmt.args.at(i).name); }
  int num(std::size_t i) const { return static_cast<int>(stmt.args.at(i).value); }

  /// The scan bound for computations over `ring`.
  int bound(const Ring& ring) const { return ws.bound() < 0 ? default_bound(ring) : ws.bound(); }
  /// True when a bounded scan over `ring` is long enough to certify vanishing.
  bool certifying(const Ring& ring) const { return bound(ring) >= minimum_certifying_bound(ring); }

  /// Records a hypothesis; true only when it holds.
  bool hyp(const std::string& name, Tri t, const std::string& evidence);
  bool hyp(const std::string& name, bool b, const std::string& evidence) { return hyp(name, tri(b), evidence); }
  void note(std::string s) { rep.notes.push_back(std::move(s)); }

  json jv(const FPModule& m) const;
  json jv(const HilbertTable& t) const;
  json jv(Tri t) const { return tri_word(t); }
  json jv(bool b) const { return b; }
  json jv(int v) const;
  json jv(const ScanResult& s) const;
  json jv(const BoundedCertificate& c) const;
  json jv(const GcDimension& g) const;
  json jv(const json& j) const { return j; }
  template <class T>
  json jv(const std::vector<T>& v) const {
    json a = json::array();
    for (const auto& x : v) a.push_back(jv(x));
    return a;
  }
  template <class A, class B>
  json jv(const std::pair<A, B>& p) const {
    return json::array({jv(p.first), jv(p.second)});
  }

  /// Computes one side of the statement, recording the library operations it invoked.
  template <class F>
  auto side(const std::string& name, F&& f) {
    auto [v, ops] = traced(std::forward<F>(f));
    rep.sides.push_back(SideRecord{name, {ops.begin(), ops.end()}, jv(v)});
    side_ops_[name] = ops;
    return v;
  }

  /// An object shared by several sides, computed outside all of them.
  template <class F>
  auto derive(const std::string& name, F&& f) {
    auto [v, ops] = traced(std::forward<F>(f));
    rep.derived.push_back(DerivedRecord{name, {ops.begin(), ops.end()}, jv(v)});
    return v;
  }

  void cmp_iff(const std::string& l, Tri a, const std::string& r, Tri b);
  void cmp_implies(const std::string& l, Tri a, const std::string& r, Tri b);
  /// kInfinity stands for +infinity; nullopt for an undetermined value.
  void cmp_equal(const std::string& l, std::optional<int> a, const std::string& r, std::optional<int> b);
  void cmp_le(const std::string& l, std::optional<int> a, const std::string& r, std::optional<int> b);
  void cmp_iso(const std::string& l, const FPModule& a, const std::string& r, const FPModule& b, bool allow_twist = false);
  /// Hilbert tables equal, optionally up to a degree shift (which is reported).
  void cmp_tables(const std::string& l, const HilbertTable& a, const std::string& r, const HilbertTable& b,
                  bool up_to_shift = false);
  /// Equality of two side values decided by the caller (for example two ideals).
  void cmp_same(const std::string& l, const std::string& r, Tri agree, std::string detail) {
    push(l, r, "equal", agree, std::move(detail));
  }
  void claim(const std::string& side, Tri value, const std::string& asserted);

 private:
  template <class F>
  static auto traced(F&& f) {
    std::set<std::string> ops;
    auto v = [&] {
      TraceScope scope;
      auto r = f();
      ops = scope.ops();
      return r;
    }();
    return std::pair{std::move(v), std::move(ops)};
  }

  void push(const std::string& l, const std::string& r, const char* relation, Tri agree, std::string detail);

  std::map<std::string, std::set<std::string>> side_ops_;
};

// ---- shared computations ----

/// Ext^i(M, C) = 0 for 1 <= i <= b and Ext^i_{I_C}(lambda M, R) = 0 for 1 <= i < b;
/// b is the scan bound. Vanishing below a certifying bound is undetermined.
Tri gc0_by_ext(const Ctx& ctx, const FPModule& m, const FPModule& lm, const SemidualizingModule& c, std::string& why);

/// The first i in [1, n) with Ext^i_{I_C}(X, R) != 0 (nullopt if none).
std::optional<int> relative_ext_nonvanishing(const FPModule& x, const SemidualizingModule& c, int n);

/// "id C_p finite whenever depth R_p <= h": over a Cohen-Macaulay ring, C_p is canonical exactly where
/// C^+ = Hom(C, omega) is free, which is where Ext^1(C^+, Omega C^+) vanishes.
Tri injective_dim_locus(const FPModule& c, int h, std::string& why);
/// "G_C-dim M_p = 0 on the punctured spectrum": Ext^i(M, C) and Ext^i(Tr_C M, C) of finite length.
Tri gc0_punctured(const Ctx& ctx, const FPModule& m, const SemidualizingModule& c, std::string& why);
/// "G_C-dim M_p finite for depth R_p <= k", given the global G_C-dimension of M.
Tri gc_finite_locus(const GcDimension& g, const SemidualizingModule& c, int k, std::string& why);

/// Tri-valued isomorphism test.
Tri iso_tri(const Ctx& ctx, const FPModule& a, const FPModule& b, bool allow_twist);
/// Every Ext^i(X, Y) vanishes for lo <= i <= hi.
Tri ext_vanish_range(const FPModule& x, const FPModule& y, int lo, int hi);
/// a => w always; w => a as well once the witness w is found (a missing witness refutes nothing).
void cmp_witness(Ctx& ctx, const std::string& l, Tri a, const std::string& w_name, Tri w);
/// "G_C-dim M finite", "G_C-dim M = 0 is certified", ... as hypothesis values.
Tri gc_finite(const GcDimension& g);
/// Checks both C certified and records it.
bool certified_hyp(Ctx& ctx, const SemidualizingModule& c, const std::string& name = "C is semidualizing");
/// M as a module over S (base change when M is declared over a ring S is a quotient of).
FPModule over(const FPModule& m, const Ring& s);
/// Records "a is G_C-perfect" and "K is semidualizing over R/a".
bool perfect_hyps(Ctx& ctx, const Ideal& a, const SemidualizingModule& c, GcPerfectData& out);
/// Records "a M = 0" for M declared over R or over R/a.
bool annihilates_hyp(Ctx& ctx, const Ideal& a, const FPModule& m, const std::string& name);

/// M is horizontally linked (certified).
Tri linked(const Ctx& ctx, const FPModule& m, std::string& why);
Tri in_auslander(const Ctx& ctx, const FPModule& m, const SemidualizingModule& c, std::string& why);
Tri in_bass(const Ctx& ctx, const FPModule& m, const SemidualizingModule& c, std::string& why);

/// G_C-dimension as an optional integer: nullopt unless certified finite.
std::optional<int> gc_value(const GcDimension& g);

std::string depth_word(int d);

/// All H^i_m(M) for lo <= i <= hi, as the duals Ext^{d-i}(M, omega): tables reversed.
HilbertTable local_cohomology_table(const Workspace& ws, const FPModule& m, int i);

// ---- check families ----

void ms_linkage(Ctx&);
void ms_prop1_ideal(Ctx&);
void g3_depth_formula(Ctx&);
void seq_2_3_2(Ctx&);
void rem_2_10_i(Ctx&);
void rem_2_10_ii(Ctx&);
void lemma_l4(Ctx&);
void thm_2_14_chain(Ctx&);
void rem_2_15_ii(Ctx&);
void lemma_2_16(Ctx&);
void prop_3_2(Ctx&);
void prop_th3(Ctx&);
void prop_p1(Ctx&);
void thm_t4(Ctx&);
void lemma_l6(Ctx&);
void thm_theorem3(Ctx&);
void thm_th1(Ctx&);
void golod_g1_g2(Ctx&);
void lemma_l1(Ctx&);
void thm_t6(Ctx&);
void thm_th5(Ctx&);
void cor_cor7(Ctx&);
void thm_t7(Ctx&);
void lemma_l5(Ctx&);
void thm_t5(Ctx&);
void cor_cor2(Ctx&);
void thm_cor6(Ctx&);
void thm_t8(Ctx&);
void cor_cor9(Ctx&);

}  // namespace linkhom::checks
