#include "context.hpp"

#include <algorithm>

#include "linkhom/errors.hpp"

namespace linkhom::checks {

namespace {

const std::set<std::string>& primitive_ops() {
  static const std::set<std::string> ops = {"minimal_presentation", "free_resolution", "syzygy",    "hom_module",
                                            "ext_module",           "tor_module",      "tensor_module", "depth",
                                            "annihilator",          "is_isomorphic"};
  return ops;
}

std::set<std::string> distinguishing(const std::set<std::string>& ops) {
  std::set<std::string> out;
  for (const auto& o : ops) {
    if (!primitive_ops().count(o)) out.insert(o);
  }
  return out;
}

std::string show(std::optional<int> v) {
  if (!v) return "undetermined";
  return *v == kInfinity ? "inf" : std::to_string(*v);
}

}  // namespace

Tri tri(bool b) { return b ? Tri::True : Tri::False; }

Tri tri(const BoundedCertificate& c) {
  if (c.certified()) return Tri::True;
  if (c.refuted()) return Tri::False;
  return Tri::Undetermined;
}

Tri tri_and(Tri a, Tri b) {
  if (a == Tri::False || b == Tri::False) return Tri::False;
  if (a == Tri::True && b == Tri::True) return Tri::True;
  return Tri::Undetermined;
}

std::string tri_word(Tri t) { return to_string(t); }

bool Ctx::hyp(const std::string& name, Tri t, const std::string& evidence) {
  rep.hypotheses.push_back(HypothesisRecord{name, t, evidence});
  return t == Tri::True;
}

json Ctx::jv(const FPModule& m) const {
  json j;
  j["zero"] = m.is_zero();
  j["generators"] = m.ngens();
  j["dimension"] = m.dimension();
  j["hilbert"] = jv(ws.table(m));
  return j;
}

json Ctx::jv(const HilbertTable& t) const {
  json a = json::array();
  for (std::size_t k = 0; k < t.dims.size(); ++k) a.push_back(json::array({t.lo + static_cast<int>(k), t.dims[k]}));
  return a;
}

json Ctx::jv(int v) const {
  if (v == kInfinity) return "inf";
  return v;
}

json Ctx::jv(const ScanResult& s) const {
  if (s.index) return *s.index;
  return "inf (scanned to " + std::to_string(s.bound) + ")";
}

json Ctx::jv(const BoundedCertificate& c) const {
  json j;
  j["property"] = to_string(c.property);
  j["status"] = to_string(c.status);
  j["bound"] = c.bound;
  if (c.refuted()) {
    j["refuted_index"] = c.refuted_index;
    j["witness"] = jv(c.refuted_table);
  }
  return j;
}

json Ctx::jv(const GcDimension& g) const {
  json j;
  j["status"] = to_string(g.status);
  if (g.finite()) j["value"] = g.value;
  j["bound"] = g.bound;
  return j;
}

void Ctx::push(const std::string& l, const std::string& r, const char* relation, Tri agree, std::string detail) {
  ComparisonRecord c;
  c.left = l;
  c.right = r;
  c.relation = relation;
  c.agree = agree;
  c.detail = std::move(detail);
  auto lo = side_ops_.find(l);
  auto ro = side_ops_.find(r);
  if (lo != side_ops_.end() && ro != side_ops_.end()) {
    c.path_disjoint = disjoint(distinguishing(lo->second), distinguishing(ro->second));
  }
  rep.comparisons.push_back(std::move(c));
}

void Ctx::cmp_iff(const std::string& l, Tri a, const std::string& r, Tri b) {
  Tri agree = (a == Tri::Undetermined || b == Tri::Undetermined) ? Tri::Undetermined : tri(a == b);
  push(l, r, "iff", agree, tri_word(a) + " / " + tri_word(b));
}

void Ctx::cmp_implies(const std::string& l, Tri a, const std::string& r, Tri b) {
  Tri agree = Tri::Undetermined;
  if (a == Tri::False || b == Tri::True) agree = Tri::True;
  else if (a == Tri::True && b == Tri::False) agree = Tri::False;
  push(l, r, "implies", agree, tri_word(a) + " / " + tri_word(b));
}

void Ctx::cmp_equal(const std::string& l, std::optional<int> a, const std::string& r, std::optional<int> b) {
  Tri agree = (a && b) ? tri(*a == *b) : Tri::Undetermined;
  push(l, r, "equal", agree, show(a) + " / " + show(b));
}

void Ctx::cmp_le(const std::string& l, std::optional<int> a, const std::string& r, std::optional<int> b) {
  Tri agree = (a && b) ? tri(*a <= *b) : Tri::Undetermined;
  push(l, r, "le", agree, show(a) + " <= " + show(b));
}

void Ctx::cmp_iso(const std::string& l, const FPModule& a, const std::string& r, const FPModule& b, bool allow_twist) {
  if (a.is_zero() && b.is_zero()) {
    push(l, r, "iso", Tri::True, "both zero");
    return;
  }
  IsoVerdict v = is_isomorphic(a, b, ws.iso_options(allow_twist));
  Tri agree = v.status == IsoStatus::Yes ? Tri::True : v.status == IsoStatus::No ? Tri::False : Tri::Undetermined;
  std::string detail = v.reason;
  if (v.status == IsoStatus::Yes && v.twist != 0) detail += " (twist " + std::to_string(v.twist) + ")";
  push(l, r, "iso", agree, detail);
}

void Ctx::cmp_tables(const std::string& l, const HilbertTable& a, const std::string& r, const HilbertTable& b,
                     bool up_to_shift) {
  if (!up_to_shift) {
    push(l, r, "equal", tri(a.same_values(b)), a.to_string() + " / " + b.to_string());
    return;
  }
  HilbertTable ta = a.trimmed();
  HilbertTable tb = b.trimmed();
  if (ta.is_zero() || tb.is_zero()) {
    push(l, r, "equal", tri(ta.is_zero() && tb.is_zero()), ta.to_string() + " / " + tb.to_string());
    return;
  }
  const bool same = ta.dims == tb.dims;
  std::string detail = ta.to_string() + " / " + tb.to_string();
  if (same) detail += " (shift " + std::to_string(tb.lo - ta.lo) + ")";
  push(l, r, "equal", tri(same), detail);
}

void Ctx::claim(const std::string& side, Tri value, const std::string& asserted) {
  ComparisonRecord c;
  c.left = side;
  c.right = asserted;
  c.relation = "claim";
  c.agree = value;
  c.detail = tri_word(value);
  rep.comparisons.push_back(std::move(c));
}

Tri gc0_by_ext(const Ctx& ctx, const FPModule& m, const FPModule& lm, const SemidualizingModule& c, std::string& why) {
  const Ring& ring = m.ring();
  const int b = ctx.bound(ring);
  for (int i = 1; i <= b; ++i) {
    if (!ext_module(i, m, c.module).is_zero()) {
      why = "Ext^" + std::to_string(i) + "(M, C) != 0";
      return Tri::False;
    }
  }
  if (auto i = relative_ext_nonvanishing(lm, c, b)) {
    why = "Ext^" + std::to_string(*i) + "_IC(lambda M, R) != 0";
    return Tri::False;
  }
  if (!ctx.certifying(ring)) {
    why = "vanishing up to a bound below dim R + 1";
    return Tri::Undetermined;
  }
  why = "vanishing up to " + std::to_string(b);
  return Tri::True;
}

std::optional<int> relative_ext_nonvanishing(const FPModule& x, const SemidualizingModule& c, int n) {
  FPModule r = FPModule::free(x.ring(), {0});
  for (int i = 1; i < n; ++i) {
    if (!relative_ext(i, x, r, c).is_zero()) return i;
  }
  return std::nullopt;
}

Tri injective_dim_locus(const FPModule& c, int h, std::string& why) {
  const Ring& ring = c.ring();
  if (!is_cohen_macaulay_ring(ring)) {
    why = "the ring is not Cohen-Macaulay";
    return Tri::Undetermined;
  }
  FPModule omega = canonical_module(ring);
  FPModule dagger = minimal_presentation(hom_module(c, omega).hom.module);
  FPModule e = ext_module(1, dagger, syzygy(dagger));
  const int d = ring_dimension(ring);
  if (e.is_zero()) {
    why = "C is canonical";
    return Tri::True;
  }
  why = "Hom(C, omega) is non-free on a locus of dimension " + std::to_string(e.dimension());
  return tri(e.dimension() < d - h);
}

Tri gc0_punctured(const Ctx& ctx, const FPModule& m, const SemidualizingModule& c, std::string& why) {
  const int b = ctx.bound(m.ring());
  FPModule tr = transpose_C(m, c);
  for (int i = 1; i <= b; ++i) {
    if (!ext_module(i, m, c.module).finite_length()) {
      why = "Ext^" + std::to_string(i) + "(M, C) is not of finite length";
      return Tri::False;
    }
    if (!ext_module(i, tr, c.module).finite_length()) {
      why = "Ext^" + std::to_string(i) + "(Tr_C M, C) is not of finite length";
      return Tri::False;
    }
  }
  if (!ctx.certifying(m.ring())) {
    why = "finite length up to a bound below dim R + 1";
    return Tri::Undetermined;
  }
  why = "finite length up to " + std::to_string(b);
  return Tri::True;
}

Tri gc_finite_locus(const GcDimension& g, const SemidualizingModule& c, int k, std::string& why) {
  if (g.finite() || g.status == GcDimStatus::ZeroModule) {
    why = "G_C-dim M is finite";
    return Tri::True;
  }
  // m itself lies in the locus.
  if (g.status == GcDimStatus::Infinite && k >= ring_depth(c.module.ring())) {
    why = "G_C-dim M is infinite and depth R <= " + std::to_string(k);
    return Tri::False;
  }
  std::string w;
  if (injective_dim_locus(c.module, k, w) == Tri::True) {
    why = "C_p is canonical in depth <= " + std::to_string(k);
    return Tri::True;
  }
  why = "G_C-dim M is " + std::string(to_string(g.status)) + " and " + w;
  return Tri::Undetermined;
}

Tri linked(const Ctx& ctx, const FPModule& m, std::string& why) {
  LinkageCertificate cert = certify_horizontal_linkage(m, ctx.ws.iso_options(true));
  why = std::string(to_string(cert.status)) + (cert.diagnostic.empty() ? "" : ": " + cert.diagnostic);
  if (cert.status == LinkageStatus::Linked) return Tri::True;
  if (cert.status == LinkageStatus::NotLinked) return Tri::False;
  return Tri::Undetermined;
}

Tri in_auslander(const Ctx& ctx, const FPModule& m, const SemidualizingModule& c, std::string& why) {
  BoundedCertificate cert = in_auslander_class(m, c, ctx.bound(m.ring()));
  why = to_string(cert.status);
  return tri(cert);
}

Tri in_bass(const Ctx& ctx, const FPModule& m, const SemidualizingModule& c, std::string& why) {
  BoundedCertificate cert = in_bass_class(m, c, ctx.bound(m.ring()));
  why = to_string(cert.status);
  return tri(cert);
}

Tri iso_tri(const Ctx& ctx, const FPModule& a, const FPModule& b, bool allow_twist) {
  if (a.is_zero() || b.is_zero()) return tri(a.is_zero() && b.is_zero());
  IsoVerdict v = is_isomorphic(a, b, ctx.ws.iso_options(allow_twist));
  if (v.status == IsoStatus::Yes) return Tri::True;
  if (v.status == IsoStatus::No) return Tri::False;
  return Tri::Undetermined;
}

Tri ext_vanish_range(const FPModule& x, const FPModule& y, int lo, int hi) {
  for (int i = lo; i <= hi; ++i) {
    if (!ext_module(i, x, y).is_zero()) return Tri::False;
  }
  return Tri::True;
}

void cmp_witness(Ctx& ctx, const std::string& l, Tri a, const std::string& w_name, Tri w) {
  ctx.cmp_implies(l, a, w_name, w);
  if (w == Tri::True) {
    ctx.cmp_implies(w_name, w, l, a);
  } else {
    ctx.note("no witness for '" + w_name + "': the converse implication is not exercised");
  }
}

Tri gc_finite(const GcDimension& g) {
  switch (g.status) {
    case GcDimStatus::Finite: return Tri::True;
    case GcDimStatus::Infinite: return Tri::False;
    case GcDimStatus::ZeroModule: return Tri::True;
    case GcDimStatus::Undetermined: return Tri::Undetermined;
  }
  return Tri::Undetermined;
}

bool certified_hyp(Ctx& ctx, const SemidualizingModule& c, const std::string& name) {
  return ctx.hyp(name, tri(c.certificate), to_string(c.certificate.status));
}

FPModule over(const FPModule& m, const Ring& s) {
  if (m.ring()->same_as(*s)) return m;
  return base_change(m, s);
}

bool perfect_hyps(Ctx& ctx, const Ideal& a, const SemidualizingModule& c, GcPerfectData& out) {
  out = gc_perfect_ideal_data(a, c, ctx.bound(a.ring));
  Tri perfect = Tri::Undetermined;
  if (out.gc_dim.status == GcDimStatus::Infinite) perfect = Tri::False;
  if (out.gc_dim.finite()) perfect = tri(out.gc_dim.value == out.grade);
  if (!ctx.hyp("the ideal is G_C-perfect", perfect, out.report)) return false;
  return ctx.hyp("K is semidualizing over the quotient", tri(out.K_certificate.certificate),
                 to_string(out.K_certificate.certificate.status));
}

bool annihilates_hyp(Ctx& ctx, const Ideal& a, const FPModule& m, const std::string& name) {
  Ring s = quotient_ring(a);
  if (m.ring()->same_as(*s)) return ctx.hyp("the ideal annihilates " + name, true, "declared over the quotient");
  if (!m.ring()->same_as(*a.ring)) throw InputError(name + " is not over the ring of the ideal or its quotient");
  return ctx.hyp("the ideal annihilates " + name, ideal_contains(annihilator(m), a), "");
}

std::optional<int> gc_value(const GcDimension& g) {
  if (g.finite()) return g.value;
  return std::nullopt;
}

std::string depth_word(int d) { return d == kInfinity ? "inf" : std::to_string(d); }

HilbertTable local_cohomology_table(const Workspace& ws, const FPModule& m, int i) {
  return ws.table(local_cohomology_dual(m, i)).reversed();
}

}  // namespace linkhom::checks
