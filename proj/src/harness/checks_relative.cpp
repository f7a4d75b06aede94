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

bool linked_stable_hyps(Ctx& ctx, const FPModule& m, const SemidualizingModule& c) {
  if (!certified_hyp(ctx, c)) return false;
  std::string why;
  if (!ctx.hyp("M is horizontally linked", linked(ctx, m, why), why)) return false;
  return ctx.hyp("stable Hom(M, C) = 0", stable_hom(m, c.module).is_zero(), "Tor_1(Tr M, C)");
}

// M satisfies S~_n iff Ext^i_IC(X, R) = 0 for 0 < i < n, where X plays the part of lambda M.
void serre_vs_relative(Ctx& ctx, const FPModule& m, const FPModule& x, const SemidualizingModule& c, int n,
                       const std::string& m_name, const std::string& x_name) {
  const std::string s_name = m_name + " satisfies S~_" + idx(n);
  const std::string v_name = "Ext^i_IC(" + x_name + ", R) = 0 for 0 < i < " + idx(n);
  Tri s = ctx.side(s_name, [&] { return tri(satisfies_serre_exact(m, n)); });
  Tri v = ctx.side(v_name, [&] { return tri(!relative_ext_nonvanishing(x, c, n)); });
  ctx.cmp_iff(s_name, s, v_name, v);
}

// Ext^i_IC(X, R) against H^i_m(M) for 0 < i < top: tables up to a shift, and total lengths.
void relative_vs_local(Ctx& ctx, const FPModule& x, const SemidualizingModule& c, const FPModule& m, int top,
                       const std::string& x_name, const std::string& m_name) {
  const FPModule r = unit(x.ring());
  for (int i = 1; i < top; ++i) {
    const std::string a_name = "Ext^" + idx(i) + "_IC(" + x_name + ", R)";
    const std::string h_name = "H^" + idx(i) + "_m(" + m_name + ")";
    FPModule a = ctx.side(a_name, [&] { return relative_ext(i, x, r, c); });
    FPModule h = ctx.side(h_name, [&] { return local_cohomology_dual(m, i); });
    HilbertTable ta = ctx.ws.table(a);
    HilbertTable th = ctx.ws.table(h).reversed();
    ctx.cmp_tables(a_name, ta, h_name, th, true);
    ctx.cmp_equal(a_name, static_cast<int>(ta.total()), h_name, static_cast<int>(th.total()));
  }
}

Tri linked_by(const Ideal& a, const Ideal& i, const Ideal& j) {
  return tri(ideal_contains(i, a) && ideal_contains(j, a) && ideal_equal(colon_ideal(a, i), j) &&
             ideal_equal(colon_ideal(a, j), i));
}

}  // namespace

void prop_3_2(Ctx& ctx) {
  const FPModule& m = ctx.mod(0);
  const SemidualizingModule& c = ctx.semi(1);
  same_ring(m, c.module);
  if (!linked_stable_hyps(ctx, m, c)) return;
  const Ring& ring = m.ring();
  FPModule lm = ctx.derive("lambda M", [&] { return lambda(m); });

  const std::string l_name = "G_C-dim M = 0";
  const std::string r_name = "Ext^i(M, C) = 0 = Ext^i_IC(lambda M, R) for i > 0";
  Tri l = ctx.side(l_name, [&] { return tri(gc_dimension_zero(m, c, ctx.bound(ring))); });
  std::string why;
  Tri r = ctx.side(r_name, [&] { return gc0_by_ext(ctx, m, lm, c, why); });
  ctx.cmp_iff(l_name, l, r_name, r);

  if (!is_cohen_macaulay_ring(ring)) {
    ctx.note("Serre conditions are decided over Cohen-Macaulay rings only; second part skipped");
    return;
  }
  GcDimension g = gc_dimension(m, c, ctx.bound(ring));
  const int d = ring_dimension(ring);
  for (int n = 1; n <= d + 1; ++n) {
    std::string w;
    if (gc_finite_locus(g, c, n - 1, w) != Tri::True) {
      ctx.note("n = " + idx(n) + " skipped: " + w);
      continue;
    }
    serre_vs_relative(ctx, m, lm, c, n, "M", "lambda M");
  }
}

void prop_th3(Ctx& ctx) {
  const FPModule& m = ctx.mod(0);
  const SemidualizingModule& c = ctx.semi(1);
  same_ring(m, c.module);
  if (!linked_stable_hyps(ctx, m, c)) return;
  const Ring& ring = m.ring();
  GcDimension g = gc_dimension(m, c, ctx.bound(ring));
  Tri positive = gc_finite(g) == Tri::True ? tri(g.value > 0) : gc_finite(g);
  if (!ctx.hyp("0 < G_C-dim M < inf", positive, to_string(g.status))) return;
  FPModule lm = ctx.derive("lambda M", [&] { return lambda(m); });
  ScanResult t = ctx.derive("t = rgr_IC(lambda M)", [&] { return relative_reduced_grade(lm, c, ctx.bound(ring)); });
  if (t.infinite()) {
    ctx.note("rgr_IC(lambda M) not reached within the bound");
    return;
  }
  const std::string l_name = "depth M = t";
  const std::string r_name = "m is associated to Ext^t_IC(lambda M, R)";
  Tri l = ctx.side(l_name, [&] { return tri(depth(m) == *t.index); });
  Tri r = ctx.side(r_name, [&] {
    FPModule e = relative_ext(*t.index, lm, unit(ring), c);
    return tri(!torsion_submodule(e).is_zero());
  });
  ctx.cmp_iff(l_name, l, r_name, r);
  ctx.note("the third equivalent condition ranges over all non-maximal primes and is not evaluated");
}

void prop_p1(Ctx& ctx) {
  const FPModule& m = ctx.mod(0);
  const SemidualizingModule& c = ctx.semi(1);
  same_ring(m, c.module);
  if (!linked_stable_hyps(ctx, m, c)) return;
  const Ring& ring = m.ring();
  GcDimension g = gc_dimension(m, c, ctx.bound(ring));
  if (!ctx.hyp("G_C-dim M < inf", gc_finite(g), to_string(g.status))) return;
  FPModule lm = ctx.derive("lambda M", [&] { return lambda(m); });
  const std::string l_name = "G_C-dim M = 0";
  Tri l = ctx.side(l_name, [&] { return tri(gc_dimension_zero(m, c, ctx.bound(ring))); });
  ScanResult t = ctx.side("rgr_IC(lambda M)", [&] { return relative_reduced_grade(lm, c, ctx.bound(ring)); });
  Tri r = t.infinite() ? (ctx.certifying(ring) ? Tri::True : Tri::Undetermined) : Tri::False;
  ctx.cmp_iff(l_name, l, "rgr_IC(lambda M)", r);
  if (g.value > 0) {
    int dm = ctx.side("depth M", [&] { return depth(m); });
    ctx.cmp_le("rgr_IC(lambda M)", t.index, "depth M", dm);
  }
}

void thm_t4(Ctx& ctx) {
  const FPModule& m = ctx.mod(0);
  const SemidualizingModule& c = ctx.semi(1);
  same_ring(m, c.module);
  const Ring& ring = m.ring();
  const int d = ring_depth(ring);
  if (!ctx.hyp("depth R >= 2", d >= 2, "depth R = " + idx(d))) return;
  if (!linked_stable_hyps(ctx, m, c)) return;
  std::string why;
  if (!ctx.hyp("G_C-dim M_p = 0 on the punctured spectrum", gc0_punctured(ctx, m, c, why), why)) return;
  FPModule lm = ctx.derive("lambda M", [&] { return lambda(m); });
  relative_vs_local(ctx, lm, c, m, d, "lambda M", "M");

  GcDimension g = gc_dimension(m, c, ctx.bound(ring));
  if (g.finite() && g.value > 0) {
    ScanResult t = ctx.side("rgr_IC(lambda M)", [&] { return relative_reduced_grade(lm, c, ctx.bound(ring)); });
    int dm = ctx.side("depth M", [&] { return depth(m); });
    ctx.cmp_equal("rgr_IC(lambda M)", t.index, "depth M", dm);
  } else {
    ctx.note("G_C-dim M is not in (0, inf): the depth identity is not exercised");
  }
}

void lemma_l6(Ctx& ctx) {
  const FPModule& m = ctx.mod(0);
  const SemidualizingModule& c = ctx.semi(1);
  same_ring(m, c.module);
  if (!certified_hyp(ctx, c)) return;
  std::string why;
  if (!ctx.hyp("M is horizontally linked", linked(ctx, m, why), why)) return;
  if (!ctx.hyp("id C_p < inf for depth R_p = 0", injective_dim_locus(c.module, 0, why), why)) return;
  const std::string l_name = "stable Hom(M, C) = 0";
  const std::string r_name = "lambda M (x) C satisfies S~_1";
  Tri l = ctx.side(l_name, [&] { return tri(stable_hom(m, c.module).is_zero()); });
  Tri r = ctx.side(r_name, [&] { return tri(satisfies_serre_exact(tensor_module(lambda(m), c.module), 1)); });
  ctx.cmp_iff(l_name, l, r_name, r);
}

void thm_theorem3(Ctx& ctx) {
  const Ideal& i = ctx.ideal(0);
  const Ideal& j = ctx.ideal(1);
  const SemidualizingModule& c = ctx.semi(2);
  const Ring& ring = c.module.ring();
  if (!i.ring->same_as(*ring) || !j.ring->same_as(*ring)) throw InputError("the ideals are not over the ring of C");
  if (!certified_hyp(ctx, c)) return;
  if (!ctx.hyp("I and J are linked by the zero ideal", linked_by(zero_ideal(ring), i, j), "")) return;
  std::string why;
  if (!ctx.hyp("id C_p < inf for depth R_p = 0", injective_dim_locus(c.module, 0, why), why)) return;
  const FPModule ri = FPModule::cyclic(i, 0);
  const FPModule rj = FPModule::cyclic(j, 0);
  if (!ctx.hyp("C/JC satisfies S~_1", satisfies_serre_exact(tensor_module(c.module, rj), 1), "")) return;

  const std::string l_name = "G_C-dim R/I = 0";
  const std::string r_name = "Ext^i(R/I, C) = 0 = Ext^i_IC(R/J, R) for i > 0";
  Tri l = ctx.side(l_name, [&] { return tri(gc_dimension_zero(ri, c, ctx.bound(ring))); });
  Tri r = ctx.side(r_name, [&] { return gc0_by_ext(ctx, ri, rj, c, why); });
  ctx.cmp_iff(l_name, l, r_name, r);

  GcDimension g = gc_dimension(ri, c, ctx.bound(ring));
  if (g.finite()) {
    for (int n = 1; n <= ring_dimension(ring) + 1; ++n) serre_vs_relative(ctx, ri, rj, c, n, "R/I", "R/J");
  } else {
    ctx.note("G_C-dim R/I is not certified finite: the Serre part is not exercised");
  }
  const int d = ring_depth(ring);
  if (d >= 2 && gc0_punctured(ctx, ri, c, why) == Tri::True) {
    relative_vs_local(ctx, rj, c, ri, d, "R/J", "R/I");
  } else {
    ctx.note("local cohomology part not exercised: depth R < 2 or R/I is not G_C-dimension zero off m");
  }
}

void thm_th1(Ctx& ctx) {
  const Ideal& a = ctx.ideal(0);
  const Ideal& i = ctx.ideal(1);
  const Ideal& j = ctx.ideal(2);
  const SemidualizingModule& c = ctx.semi(3);
  const Ring& ring = c.module.ring();
  for (const Ideal* x : {&a, &i, &j}) {
    if (!x->ring->same_as(*ring)) throw InputError("the ideals are not over the ring of C");
  }
  if (!certified_hyp(ctx, c)) return;
  GcPerfectData data;
  if (!perfect_hyps(ctx, a, c, data)) return;
  if (!ctx.hyp("I and J are linked by the ideal", linked_by(a, i, j), "")) return;
  const Ring& s = data.quotient;
  const SemidualizingModule& k = data.K_certificate;
  const FPModule mi = FPModule::cyclic(make_ideal(s, i.gens), 0);
  const FPModule mj = FPModule::cyclic(make_ideal(s, j.gens), 0);
  const FPModule ri = FPModule::cyclic(i, 0);
  std::string why;
  if (!ctx.hyp("K/JK satisfies S~_1", satisfies_serre_exact(tensor_module(k.module, mj), 1), "")) return;
  if (!ctx.hyp("id K_p < inf for depth S_p = 0", injective_dim_locus(k.module, 0, why), why)) return;

  const std::string l_name = "R/I is G_C-perfect";
  const std::string r_name = "Ext^i_S(R/I, K) = 0 = Ext^i_IK(R/J, S) for i > 0";
  Tri l = ctx.side(l_name, [&] {
    GcDimension g = gc_dimension(ri, c, ctx.bound(ring));
    if (!g.finite()) return g.status == GcDimStatus::Infinite ? Tri::False : Tri::Undetermined;
    return tri(g.value == grade(ri));
  });
  Tri r = ctx.side(r_name, [&] { return gc0_by_ext(ctx, mi, mj, k, why); });
  ctx.cmp_iff(l_name, l, r_name, r);

  GcDimension g = gc_dimension(ri, c, ctx.bound(ring));
  if (g.finite()) {
    for (int n = 1; n <= ring_dimension(s) + 1; ++n) serre_vs_relative(ctx, mi, mj, k, n, "R/I", "R/J");
  } else {
    ctx.note("G_C-dim R/I is not certified finite: the Serre part is not exercised");
  }
  const int ds = ring_depth(s);
  if (ds >= 2 && gc0_punctured(ctx, mi, k, why) == Tri::True) {
    relative_vs_local(ctx, mj, k, ri, ds, "R/J", "R/I");
  } else {
    ctx.note("local cohomology part not exercised: depth S < 2 or R/I is not G_C-perfect off m");
  }
}

void golod_g1_g2(Ctx& ctx) {
  const Ideal& a = ctx.ideal(0);
  const FPModule& m0 = ctx.mod(1);
  const SemidualizingModule& c = ctx.semi(2);
  const Ring& ring = c.module.ring();
  if (!a.ring->same_as(*ring)) throw InputError("the ideal is not over the ring of C");
  if (!certified_hyp(ctx, c)) return;
  if (!annihilates_hyp(ctx, a, m0, "M")) return;
  GcPerfectData data = gc_perfect_ideal_data(a, c, ctx.bound(ring));
  Tri perfect = Tri::Undetermined;
  if (data.gc_dim.status == GcDimStatus::Infinite) perfect = Tri::False;
  if (data.gc_dim.finite()) perfect = tri(data.gc_dim.value == data.grade);
  if (!ctx.hyp("the ideal is G_C-perfect", perfect, data.report)) return;
  const Ring& s = data.quotient;
  const FPModule ms = over(m0, s);
  const FPModule mr = restrict_scalars(ms, ring);
  const int g = data.grade;

  const std::string k_name = "K is semidualizing over R/a";
  Tri kc = ctx.side(k_name, [&] { return tri(is_semidualizing(data.K, ctx.bound(s)).certificate); });
  ctx.claim(k_name, kc, "true");

  for (int i = 0; i <= 2; ++i) {
    const std::string l_name = "Ext^" + idx(i) + "_(R/a)(M, K)";
    const std::string r_name = "Ext^" + idx(g + i) + "(M, C)";
    FPModule l = ctx.side(l_name, [&] { return restrict_scalars(ext_module(i, ms, data.K), ring); });
    FPModule r = ctx.side(r_name, [&] { return ext_module(g + i, mr, c.module); });
    auto [tl, tr] = comparison_tables(l, r);
    ctx.cmp_tables(l_name, tl, r_name, tr);
    ctx.cmp_iso(l_name, l, r_name, r);
  }

  const std::string d_name = "G_C-dim M";
  const std::string e_name = "grade a + sup{i : Ext^i_(R/a)(M, K) != 0}";
  GcDimension gd = ctx.side(d_name, [&] { return gc_dimension(mr, c, ctx.bound(ring)); });
  int shifted = ctx.side(e_name, [&] {
    int sup = -1;
    for (int i = 0; i <= ctx.bound(s); ++i) {
      if (!ext_module(i, ms, data.K).is_zero()) sup = i;
    }
    return g + sup;
  });
  if (gd.finite()) {
    ctx.cmp_equal(d_name, gd.value, e_name, shifted);
  } else {
    ctx.note("G_C-dim M is not certified finite: the dimension shift is not exercised");
  }
}

void lemma_l1(Ctx& ctx) {
  const Ideal& a = ctx.ideal(0);
  const FPModule& m0 = ctx.mod(1);
  const SemidualizingModule& c = ctx.semi(2);
  const Ring& ring = c.module.ring();
  if (!a.ring->same_as(*ring)) throw InputError("the ideal is not over the ring of C");
  if (!certified_hyp(ctx, c)) return;
  GcPerfectData data;
  if (!perfect_hyps(ctx, a, c, data)) return;
  if (!annihilates_hyp(ctx, a, m0, "M")) return;
  const FPModule ms = over(m0, data.quotient);
  std::string why;
  if (!ctx.hyp("M is horizontally linked over R/a", linked(ctx, ms, why), why)) return;
  const FPModule mr = restrict_scalars(ms, ring);
  int gm = ctx.side("grade M", [&] { return grade(mr); });
  int ga = ctx.side("grade a", [&] {
    const FPModule ra = FPModule::cyclic(a, 0);
    const FPModule r = unit(ring);
    int i = 0;
    while (ext_module(i, ra, r).is_zero()) ++i;
    return i;
  });
  ctx.cmp_equal("grade M", gm, "grade a", ga);
}

void thm_t6(Ctx& ctx) {
  const Ideal& a = ctx.ideal(0);
  const FPModule& m0 = ctx.mod(1);
  const FPModule& n0 = ctx.mod(2);
  const SemidualizingModule& c = ctx.semi(3);
  const Ring& ring = c.module.ring();
  if (!a.ring->same_as(*ring)) throw InputError("the ideal is not over the ring of C");
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
  if (!ctx.hyp("M and N are linked by the ideal", link, "M = lambda N and N = lambda M over R/a")) return;
  if (!ctx.hyp("stable Hom(M, K) = 0", stable_hom(ms, k.module).is_zero(), "over R/a")) return;
  const FPModule mr = restrict_scalars(ms, ring);

  const std::string l_name = "M is G_C-perfect";
  const std::string r_name = "Ext^i_IK(N, R/a) = 0 = Ext^i_(R/a)(M, K) for i >= 1";
  Tri l = ctx.side(l_name, [&] {
    GcDimension g = gc_dimension(mr, c, ctx.bound(ring));
    if (!g.finite()) return g.status == GcDimStatus::Infinite ? Tri::False : Tri::Undetermined;
    return tri(g.value == grade(mr));
  });
  std::string why;
  Tri r = ctx.side(r_name, [&] { return gc0_by_ext(ctx, ms, ns, k, why); });
  ctx.cmp_iff(l_name, l, r_name, r);

  GcDimension g = gc_dimension(mr, c, ctx.bound(ring));
  if (g.finite()) {
    for (int n = 1; n <= ring_dimension(s) + 1; ++n) serre_vs_relative(ctx, ms, ns, k, n, "M", "N");
  } else {
    ctx.note("G_C-dim M is not certified finite: the Serre part is not exercised");
  }
  const int ds = ring_depth(s);
  if (ds >= 2 && gc0_punctured(ctx, ms, k, why) == Tri::True) {
    relative_vs_local(ctx, ns, k, mr, ds, "N", "M");
    GcDimension gk = gc_dimension(ms, k, ctx.bound(s));
    if (gk.finite() && gk.value > 0) {
      ScanResult t = ctx.side("rgr_IK(N)", [&] { return relative_reduced_grade(ns, k, ctx.bound(s)); });
      int dm = ctx.side("depth M", [&] { return depth(mr); });
      ctx.cmp_equal("rgr_IK(N)", t.index, "depth M", dm);
    }
  } else {
    ctx.note("local cohomology part not exercised: depth R/a < 2 or M is not G_C-perfect off m");
  }
}

}  // namespace linkhom::checks
