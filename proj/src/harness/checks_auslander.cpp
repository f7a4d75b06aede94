#include <algorithm>
#include <string>

#include "context.hpp"
#include "linkhom/errors.hpp"

namespace linkhom::checks {

namespace {

FPModule unit(const Ring& r) { return FPModule::free(r, {0}); }

std::string idx(int i) { return std::to_string(i); }

void same_ring(const FPModule& a, const FPModule& b) {
  if (!a.ring()->same_as(*b.ring())) throw InputError("the modules are over different rings");
}

Tri witness(bool found) { return found ? Tri::True : Tri::Undetermined; }

bool cm_hyp(Ctx& ctx, const Ring& ring) {
  return ctx.hyp("R is Cohen-Macaulay", is_cohen_macaulay_ring(ring),
                 "depth " + idx(ring_depth(ring)) + ", dim " + idx(ring_dimension(ring)));
}

bool gc_finite_hyp(Ctx& ctx, const FPModule& m, const SemidualizingModule& c) {
  GcDimension g = gc_dimension(m, c, ctx.bound(m.ring()));
  return ctx.hyp("G_C-dim M < inf", gc_finite(g), to_string(g.status));
}

// "M is (generalized) CM" style test of local cohomology: H^i_m(X) finite length for 0 <= i < dim X.
Tri lc_finite_below_dim(const FPModule& x) {
  if (x.is_zero()) return Tri::True;
  for (int i = 0; i < x.dimension(); ++i) {
    if (!local_cohomology_dual(x, i).finite_length()) return Tri::False;
  }
  return Tri::True;
}

void lc_vs_ext(Ctx& ctx, const std::string& h_name, const FPModule& h, const std::string& e_name, const FPModule& e) {
  HilbertTable th = ctx.ws.table(h).reversed();
  HilbertTable te = ctx.ws.table(e);
  ctx.cmp_tables(h_name, th, e_name, te, true);
  ctx.cmp_equal(h_name, static_cast<int>(th.total()), e_name, static_cast<int>(te.total()));
}

}  // namespace

void thm_th5(Ctx& ctx) {
  const FPModule& m = ctx.mod(0);
  const SemidualizingModule& c = ctx.semi(1);
  const int n = ctx.num(2);
  same_ring(m, c.module);
  const Ring& ring = m.ring();
  if (!certified_hyp(ctx, c)) return;
  if (!ctx.hyp("n >= 1", n >= 1, "n = " + idx(n))) return;
  std::string why;
  if (!ctx.hyp("M is in A_C", in_auslander(ctx, m, c, why), why)) return;
  SemidualizingModule r = free_semidualizing(ring);

  const std::string a_name = "Ext^i(Tr M, C) = 0 for 1 <= i <= n";
  const std::string b_name = "Ext^i(Tr M, R) = 0 for 1 <= i <= n";
  const std::string w_name = "M is an n-th syzygy (pushforward witness)";
  Tri a = ctx.side(a_name, [&] { return ext_vanish_range(transpose(m), c.module, 1, n); });
  Tri b = ctx.side(b_name, [&] { return ext_vanish_range(transpose_C(m, r), r.module, 1, n); });
  Tri w = ctx.side(w_name, [&] { return witness(c_syzygy_steps(m, r.module, n) == n); });
  ctx.cmp_iff(a_name, a, b_name, b);
  ctx.cmp_implies(b_name, b, w_name, w);
  GcDimension g = gc_dimension(m, r, ctx.bound(ring));
  std::string w2;
  if (n < 2 || gc_finite_locus(g, r, n - 2, w2) == Tri::True) {
    if (w == Tri::True) {
      ctx.cmp_implies(w_name, w, b_name, b);
    } else {
      ctx.note("no syzygy witness: the converse is not exercised");
    }
  } else {
    ctx.note("converse not exercised: " + w2);
  }
}

void cor_cor7(Ctx& ctx) {
  const FPModule& m = ctx.mod(0);
  const SemidualizingModule& c = ctx.semi(1);
  const int n = ctx.num(2);
  same_ring(m, c.module);
  const Ring& ring = m.ring();
  if (!certified_hyp(ctx, c)) return;
  if (!ctx.hyp("n >= 1", n >= 1, "n = " + idx(n))) return;
  if (!ctx.hyp("M is stable", is_stable(m), "")) return;
  std::string why;
  if (!ctx.hyp("M is in A_C", in_auslander(ctx, m, c, why), why)) return;
  SemidualizingModule r = free_semidualizing(ring);
  if (n >= 2) {
    GcDimension g = gc_dimension(m, r, ctx.bound(ring));
    if (!ctx.hyp("G-dim M_p < inf for depth R_p <= n - 2", gc_finite_locus(g, r, n - 2, why), why)) return;
  }
  const std::string w_name = "M is an n-th syzygy (pushforward witness)";
  const std::string l_name = "M horizontally linked and Ext^i(lambda M, C) = 0 for 0 < i < n";
  Tri w = ctx.side(w_name, [&] { return witness(c_syzygy_steps(m, r.module, n) == n); });
  Tri l = ctx.side(l_name, [&] {
    LinkageCertificate cert = certify_horizontal_linkage(m, ctx.ws.iso_options(true));
    if (cert.status == LinkageStatus::NotLinked) return Tri::False;
    if (cert.status != LinkageStatus::Linked) return Tri::Undetermined;
    return ext_vanish_range(lambda(m), c.module, 1, n - 1);
  });
  ctx.cmp_implies(l_name, l, w_name, w);
  if (w == Tri::True) {
    ctx.cmp_implies(w_name, w, l_name, l);
  } else {
    ctx.note("no syzygy witness: the forward implication is not exercised");
  }
}

void thm_t7(Ctx& ctx) {
  const FPModule& m = ctx.mod(0);
  const SemidualizingModule& c = ctx.semi(1);
  same_ring(m, c.module);
  const Ring& ring = m.ring();
  if (!certified_hyp(ctx, c)) return;
  std::string why;
  if (!ctx.hyp("M is horizontally linked", linked(ctx, m, why), why)) return;
  if (!gc_finite_hyp(ctx, m, c)) return;
  FPModule lm = ctx.derive("lambda M", [&] { return lambda(m); });
  if (!ctx.hyp("lambda M is in A_C", in_auslander(ctx, lm, c, why), why)) return;
  SemidualizingModule r = free_semidualizing(ring);
  const int b = ctx.bound(ring);
  const int n = ring_depth(ring) - depth(m) + 1;

  const std::string i_name = "G-dim M = 0";
  const std::string ii_name = "G-dim lambda M = 0";
  const std::string iii_name = "lambda M satisfies S~_n, n = depth R - depth M + 1";
  const std::string iv_name = "G_C-dim M = 0";
  Tri t1 = ctx.side(i_name, [&] {
    GcDimension g = gc_dimension(m, r, b);
    if (!g.finite()) return g.status == GcDimStatus::Infinite ? Tri::False : Tri::Undetermined;
    return tri(g.value == 0);
  });
  Tri t2 = ctx.side(ii_name, [&] { return tri(gc_dimension_zero(lambda(m), r, b)); });
  Tri t3 = ctx.side(iii_name, [&] { return tri(satisfies_serre_exact(lambda(m), n)); });
  Tri t4 = ctx.side(iv_name, [&] { return tri(gc_dimension_zero(m, c, b)); });
  ctx.cmp_iff(i_name, t1, iv_name, t4);
  ctx.cmp_iff(i_name, t1, ii_name, t2);
  ctx.cmp_iff(iii_name, t3, iv_name, t4);
}

void thm_t5(Ctx& ctx) {
  const FPModule& m = ctx.mod(0);
  const SemidualizingModule& c = ctx.semi(1);
  const int n = ctx.num(2);
  same_ring(m, c.module);
  const Ring& ring = m.ring();
  if (!cm_hyp(ctx, ring)) return;
  if (!certified_hyp(ctx, c)) return;
  if (!ctx.hyp("n >= 1", n >= 1, "n = " + idx(n))) return;
  if (!gc_finite_hyp(ctx, m, c)) return;
  SemidualizingModule w = is_semidualizing(canonical_module(ring), ctx.bound(ring));
  if (!certified_hyp(ctx, w, "omega is semidualizing")) return;

  const std::string s1 = "M satisfies S~_n";
  const std::string s2 = "M is an n-th omega-syzygy (pushforward witness)";
  const std::string s3 = "M is an n-th C-syzygy (pushforward witness)";
  const std::string s4 = "Ext^i(Tr_C M, omega) = 0 for 1 <= i <= n";
  const std::string s5 = "Ext^i(Tr_C M, C) = 0 for 1 <= i <= n";
  const std::string s6 = "Ext^i(Tr_omega M, omega) = 0 for 1 <= i <= n";
  Tri v1 = ctx.side(s1, [&] { return tri(satisfies_serre_exact(m, n)); });
  Tri v2 = ctx.side(s2, [&] { return witness(c_syzygy_steps(m, w.module, n) == n); });
  Tri v3 = ctx.side(s3, [&] { return witness(c_syzygy_steps(m, c.module, n) == n); });
  Tri v4 = ctx.side(s4, [&] { return ext_vanish_range(transpose_C(m, c), w.module, 1, n); });
  Tri v5 = ctx.side(s5, [&] { return ext_vanish_range(transpose_C(m, c), c.module, 1, n); });
  Tri v6 = ctx.side(s6, [&] { return ext_vanish_range(transpose_C(m, w), w.module, 1, n); });
  cmp_witness(ctx, s1, v1, s2, v2);
  cmp_witness(ctx, s1, v1, s3, v3);
  ctx.cmp_iff(s1, v1, s4, v4);
  ctx.cmp_iff(s1, v1, s5, v5);
  ctx.cmp_iff(s1, v1, s6, v6);
  cmp_witness(ctx, s4, v4, s3, v3);
}

void cor_cor2(Ctx& ctx) {
  const FPModule& m = ctx.mod(0);
  const SemidualizingModule& c = ctx.semi(1);
  const int n = ctx.num(2);
  same_ring(m, c.module);
  const Ring& ring = m.ring();
  if (!cm_hyp(ctx, ring)) return;
  if (!certified_hyp(ctx, c)) return;
  if (!ctx.hyp("n >= 1", n >= 1, "n = " + idx(n))) return;
  if (!ctx.hyp("M is stable", is_stable(m), "")) return;
  if (!gc_finite_hyp(ctx, m, c)) return;
  if (!ctx.hyp("stable Hom(M, C) = 0", stable_hom(m, c.module).is_zero(), "Tor_1(Tr M, C)")) return;
  const int d = ring_dimension(ring);
  const std::string l_name = "M satisfies S~_n";
  const std::string r_name = "M horizontally linked and H^i_m(lambda M (x) C) = 0 for d - n < i < d";
  Tri l = ctx.side(l_name, [&] { return tri(satisfies_serre_exact(m, n)); });
  Tri r = ctx.side(r_name, [&] {
    LinkageCertificate cert = certify_horizontal_linkage(m, ctx.ws.iso_options(true));
    if (cert.status == LinkageStatus::NotLinked) return Tri::False;
    if (cert.status != LinkageStatus::Linked) return Tri::Undetermined;
    FPModule x = tensor_module(lambda(m), c.module);
    for (int i = std::max(0, d - n + 1); i < d; ++i) {
      if (!local_cohomology_dual(x, i).is_zero()) return Tri::False;
    }
    return Tri::True;
  });
  ctx.cmp_iff(l_name, l, r_name, r);
}

void thm_cor6(Ctx& ctx) {
  const FPModule& m = ctx.mod(0);
  const SemidualizingModule& c = ctx.semi(1);
  same_ring(m, c.module);
  const Ring& ring = m.ring();
  if (!cm_hyp(ctx, ring)) return;
  if (!certified_hyp(ctx, c)) return;
  std::string why;
  if (!ctx.hyp("M is horizontally linked", linked(ctx, m, why), why)) return;
  if (!gc_finite_hyp(ctx, m, c)) return;
  FPModule lm = ctx.derive("lambda M", [&] { return lambda(m); });
  if (!ctx.hyp("lambda M is in A_C", in_auslander(ctx, lm, c, why), why)) return;
  const int dr = ring_depth(ring);
  const int d = ring_dimension(ring);

  const std::string s1 = "M is maximal Cohen-Macaulay";
  const std::string s2 = "lambda M is maximal Cohen-Macaulay";
  const std::string s3 = "M satisfies S_n, n = depth R - depth lambda M + 1";
  const std::string s4 = "lambda M satisfies S_n, n = depth R - depth M + 1";
  Tri v1 = ctx.side(s1, [&] { return tri(depth(m) >= d); });
  Tri v2 = ctx.side(s2, [&] { return tri(is_maximal_cohen_macaulay(lambda(m))); });
  Tri v3 = ctx.side(s3, [&] { return tri(satisfies_serre_exact(m, dr - depth(lambda(m)) + 1)); });
  Tri v4 = ctx.side(s4, [&] { return tri(satisfies_serre_exact(lambda(m), dr - depth(m) + 1)); });
  ctx.cmp_iff(s1, v1, s2, v2);
  ctx.cmp_iff(s1, v1, s3, v3);
  ctx.cmp_iff(s1, v1, s4, v4);
}

void thm_t8(Ctx& ctx) {
  const FPModule& m = ctx.mod(0);
  const SemidualizingModule& c = ctx.semi(1);
  same_ring(m, c.module);
  const Ring& ring = m.ring();
  if (!cm_hyp(ctx, ring)) return;
  const int d = ring_dimension(ring);
  if (!ctx.hyp("dim R >= 2", d >= 2, "dim R = " + idx(d))) return;
  if (!certified_hyp(ctx, c)) return;
  std::string why;
  if (!ctx.hyp("M is horizontally linked", linked(ctx, m, why), why)) return;
  GcDimension g = gc_dimension(m, c, ctx.bound(ring));
  if (!ctx.hyp("G_C-dim M_p < inf on the punctured spectrum", gc_finite_locus(g, c, d - 1, why), why)) return;
  FPModule lm = ctx.derive("lambda M", [&] { return lambda(m); });
  if (!ctx.hyp("lambda M is in A_C", in_auslander(ctx, lm, c, why), why)) return;
  const FPModule r = unit(ring);

  const std::string g1 = "M is generalized Cohen-Macaulay";
  const std::string g2 = "lambda M is generalized Cohen-Macaulay";
  Tri v1 = ctx.side(g1, [&] { return tri(is_generalized_cohen_macaulay(m)); });
  Tri v2 = ctx.side(g2, [&] { return lc_finite_below_dim(lambda(m)); });
  ctx.cmp_iff(g1, v1, g2, v2);
  if (v1 != Tri::True) {
    ctx.note("M is not generalized Cohen-Macaulay: the isomorphisms are not exercised");
    return;
  }
  for (int i = 1; i < d; ++i) {
    const std::string h_name = "H^" + idx(i) + "_m(M)";
    const std::string e_name = "Ext^" + idx(i) + "(lambda M, R)";
    FPModule h = ctx.side(h_name, [&] { return local_cohomology_dual(m, i); });
    FPModule e = ctx.side(e_name, [&] { return ext_module(i, lambda(m), r); });
    lc_vs_ext(ctx, h_name, h, e_name, e);
    const std::string h2_name = "H^" + idx(i) + "_m(lambda M)";
    const std::string e2_name = "Ext^" + idx(i) + "(M, R)";
    FPModule h2 = ctx.side(h2_name, [&] { return local_cohomology_dual(lambda(m), i); });
    FPModule e2 = ctx.side(e2_name, [&] { return ext_module(i, m, r); });
    lc_vs_ext(ctx, h2_name, h2, e2_name, e2);
  }
  if (depth(m) < d) {
    int dm = ctx.side("depth M", [&] { return depth(m); });
    ScanResult t = ctx.side("rgr(lambda M)", [&] { return reduced_grade(lambda(m), r, ctx.bound(ring)); });
    ctx.cmp_equal("depth M", dm, "rgr(lambda M)", t.index);
  }
}

void cor_cor9(Ctx& ctx) {
  const Ideal& a = ctx.ideal(0);
  const FPModule& m0 = ctx.mod(1);
  const FPModule& n0 = ctx.mod(2);
  const SemidualizingModule& c = ctx.semi(3);
  const Ring& ring = c.module.ring();
  if (!a.ring->same_as(*ring)) throw InputError("the ideal is not over the ring of C");
  if (!cm_hyp(ctx, ring)) return;
  if (!certified_hyp(ctx, c)) return;
  GcPerfectData data;
  if (!perfect_hyps(ctx, a, c, data)) return;
  if (!annihilates_hyp(ctx, a, m0, "M")) return;
  if (!annihilates_hyp(ctx, a, n0, "N")) return;
  const Ring& s = data.quotient;
  const SemidualizingModule& k = data.K_certificate;
  const FPModule ms = over(m0, s);
  const FPModule ns = over(n0, s);
  Tri link = tri_and(iso_tri(ctx, lambda(ns), ms, true), iso_tri(ctx, lambda(ms), ns, true));
  if (!ctx.hyp("M and N are linked by the ideal", link, "M = lambda N and N = lambda M over R/c")) return;
  const FPModule mr = restrict_scalars(ms, ring);
  if (!gc_finite_hyp(ctx, mr, c)) return;
  std::string why;
  if (!ctx.hyp("N is in A_K", in_auslander(ctx, ns, k, why), why)) return;
  const int ds = ring_depth(s);
  const int dims = ring_dimension(s);

  const std::string s1 = "M is Cohen-Macaulay";
  const std::string s2 = "N is Cohen-Macaulay";
  const std::string s3 = "M satisfies S_n, n = depth R/c - depth N + 1";
  const std::string s4 = "N satisfies S_n, n = depth R/c - depth M + 1";
  Tri v1 = ctx.side(s1, [&] { return tri(depth(ms) >= dims); });
  Tri v2 = ctx.side(s2, [&] { return tri(is_maximal_cohen_macaulay(ns)); });
  Tri v3 = ctx.side(s3, [&] { return tri(satisfies_serre_exact(ms, ds - depth(ns) + 1)); });
  Tri v4 = ctx.side(s4, [&] { return tri(satisfies_serre_exact(ns, ds - depth(ms) + 1)); });
  ctx.cmp_iff(s1, v1, s2, v2);
  ctx.cmp_iff(s1, v1, s3, v3);
  ctx.cmp_iff(s1, v1, s4, v4);

  if (data.K.ngens() == 1) {
    const std::string k_name = "K = R/c up to twist";
    Tri kg = ctx.side(k_name, [&] { return iso_tri(ctx, data.K, unit(s), true); });
    ctx.claim(k_name, kg, "true for cyclic K");
  }

  if (dims < 2) {
    ctx.note("dim R/c < 2: the generalized Cohen-Macaulay part is not exercised");
    return;
  }
  const std::string g1 = "M is generalized Cohen-Macaulay";
  const std::string g2 = "N is generalized Cohen-Macaulay";
  Tri w1 = ctx.side(g1, [&] { return tri(is_generalized_cohen_macaulay(ms)); });
  Tri w2 = ctx.side(g2, [&] { return lc_finite_below_dim(ns); });
  ctx.cmp_iff(g1, w1, g2, w2);
  if (w1 != Tri::True) return;
  const FPModule so = unit(s);
  for (int i = 1; i < dims; ++i) {
    const std::string h_name = "H^" + idx(i) + "_m(M)";
    const std::string e_name = "Ext^" + idx(i) + "_(R/c)(N, R/c)";
    FPModule h = ctx.side(h_name, [&] { return local_cohomology_dual(ms, i); });
    FPModule e = ctx.side(e_name, [&] { return ext_module(i, ns, so); });
    lc_vs_ext(ctx, h_name, h, e_name, e);
  }
  if (depth(ms) < dims) {
    int dm = ctx.side("depth M", [&] { return depth(ms); });
    ScanResult t = ctx.side("rgr(N)", [&] { return reduced_grade(ns, so, ctx.bound(s)); });
    ctx.cmp_equal("depth M", dm, "rgr(N)", t.index);
  }
}

}  // namespace linkhom::checks
