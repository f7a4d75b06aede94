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

}  // namespace

void ms_linkage(Ctx& ctx) {
  const FPModule& m = ctx.mod(0);
  if (!ctx.hyp("M != 0", !m.is_zero(), "")) return;
  const FPModule r = unit(m.ring());
  const std::string a_name = "M = lambda^2 M";
  const std::string b_name = "M stable and Ext^1(Tr M, R) = 0";
  const std::string c_name = "M stable and a syzygy module";
  Tri a = ctx.side(a_name, [&] { return iso_tri(ctx, lambda(lambda(m)), m, true); });
  Tri b = ctx.side(b_name, [&] { return tri(is_stable(m) && ext_module(1, transpose(m), r).is_zero()); });
  Tri c = ctx.side(c_name, [&] { return tri(is_stable(m) && c_syzygy_steps(m, r, 1) == 1); });
  ctx.cmp_iff(a_name, a, b_name, b);
  ctx.cmp_iff(a_name, a, c_name, c);
}

void ms_prop1_ideal(Ctx& ctx) {
  const Ideal& c = ctx.ideal(0);
  const Ideal& i = ctx.ideal(1);
  if (!c.ring->same_as(*i.ring)) throw InputError("the ideals are over different rings");
  if (!ctx.hyp("c is contained in I", ideal_contains(i, c), "")) return;
  if (!ctx.hyp("I is a proper ideal", !is_unit_ideal(i), "")) return;

  IdealLink link;
  const std::string l_name = "J = c : I and c : J = I";
  Tri l = ctx.side(l_name, [&] {
    link = link_ideal(c, i);
    return tri(link.verified);
  });
  ctx.note("J = " + to_string(link.J));

  Ideal j2;
  const std::string r_name = "lambda(R'/J') = R'/I for J' = ann lambda(R'/I)";
  Tri r = ctx.side(r_name, [&] {
    Ring q = quotient_ring(c);
    FPModule ri = FPModule::cyclic(make_ideal(q, i.gens), 0);
    FPModule x = minimal_presentation(lambda(ri));
    if (x.ngens() != 1) return Tri::False;
    Ideal ann = annihilator(x);
    j2 = ideal_sum(make_ideal(c.ring, ann.gens), c);
    FPModule rj = FPModule::cyclic(make_ideal(q, j2.gens), 0);
    return iso_tri(ctx, lambda(rj), ri, true);
  });
  ctx.cmp_iff(l_name, l, r_name, r);
  if (j2.ring) ctx.cmp_same(l_name, r_name, tri(ideal_equal(link.J, j2)), to_string(link.J) + " / " + to_string(j2));
}

void g3_depth_formula(Ctx& ctx) {
  const FPModule& m = ctx.mod(0);
  const SemidualizingModule& c = ctx.semi(1);
  same_ring(m, c.module);
  if (!certified_hyp(ctx, c)) return;
  if (!ctx.hyp("M != 0", !m.is_zero(), "")) return;
  const Ring& ring = m.ring();
  const std::string l_name = "G_C-dim M";
  GcDimension g = ctx.side(l_name, [&] { return gc_dimension(m, c, ctx.bound(ring)); });
  if (!ctx.hyp("G_C-dim M is finite", gc_finite(g), to_string(g.status))) return;
  const std::string r_name = "depth R - depth M";
  int f = ctx.side(r_name, [&] { return ring_depth(ring) - depth(m); });
  ctx.cmp_equal(l_name, gc_value(g), r_name, f);
}

void seq_2_3_2(Ctx& ctx) {
  const FPModule& m = ctx.mod(0);
  const SemidualizingModule& c = ctx.semi(1);
  same_ring(m, c.module);
  if (!certified_hyp(ctx, c)) return;
  const std::string l_name = "kernel and cokernel of M -> Hom(Hom(M, C), C)";
  const std::string r_name = "Ext^1 and Ext^2 of Tr_C M into C";
  auto l = ctx.side(l_name, [&] {
    GradedMap theta = bidual_map(m, c.module);
    return std::pair{kernel(theta).module, cokernel(theta)};
  });
  auto r = ctx.side(r_name, [&] {
    FPModule tr = transpose_C(m, c);
    return std::pair{ext_module(1, tr, c.module), ext_module(2, tr, c.module)};
  });
  ctx.cmp_iso(l_name, l.first, r_name, r.first);
  ctx.cmp_iso(l_name, l.second, r_name, r.second);
}

void rem_2_10_i(Ctx& ctx) {
  const FPModule& m = ctx.mod(0);
  const SemidualizingModule& c = ctx.semi(1);
  same_ring(m, c.module);
  if (!certified_hyp(ctx, c)) return;
  const std::string l_name = "Tr M (x) C";
  const std::string r_name = "Tr_C M";
  FPModule l = ctx.side(l_name, [&] { return tensor_module(transpose(m), c.module); });
  FPModule r = ctx.side(r_name, [&] { return transpose_C(m, c); });
  ctx.cmp_iso(l_name, l, r_name, r);
}

void rem_2_10_ii(Ctx& ctx) {
  const FPModule& m = ctx.mod(0);
  const SemidualizingModule& c = ctx.semi(1);
  same_ring(m, c.module);
  if (!certified_hyp(ctx, c)) return;
  if (!ctx.hyp("stable Hom(M, C) = 0", stable_hom(m, c.module).is_zero(), "Tor_1(Tr M, C)")) return;
  const std::string l_name = "lambda_C M";
  const std::string r_name = "lambda M (x) C";
  FPModule l = ctx.side(l_name, [&] { return lambda_C(m, c); });
  FPModule r = ctx.side(r_name, [&] { return tensor_module(lambda(m), c.module); });
  ctx.cmp_iso(l_name, l, r_name, r);

  FPModule lm = ctx.derive("lambda M", [&] { return lambda(m); });
  FPModule lcm = ctx.derive("lambda_C M (shared)", [&] { return lambda_C(m, c); });
  const FPModule ring = unit(m.ring());
  for (int i = 1; i <= 3; ++i) {
    const std::string a_name = "Ext^" + idx(i) + "_IC(lambda M, R)";
    const std::string b_name = "Ext^" + idx(i) + "(lambda_C M, C)";
    const std::string t_name = "Ext^" + idx(i + 1) + "(Tr_C M, C)";
    FPModule a = ctx.side(a_name, [&] { return relative_ext(i, lm, ring, c); });
    FPModule b = ctx.side(b_name, [&] { return ext_module(i, lcm, c.module); });
    FPModule t = ctx.side(t_name, [&] { return ext_module(i + 1, transpose_C(m, c), c.module); });
    ctx.cmp_iso(a_name, a, t_name, t);
    ctx.cmp_iso(b_name, b, t_name, t);
  }
}

void lemma_l4(Ctx& ctx) {
  const FPModule& m = ctx.mod(0);
  const SemidualizingModule& c = ctx.semi(1);
  same_ring(m, c.module);
  if (!certified_hyp(ctx, c)) return;
  GradedMap theta = double_transpose_map(m, c.module);
  FPModule x = ctx.derive("X = coker(M -> Tr_C Tr_C M)", [&] { return cokernel(theta); });
  const std::string k_name = "kernel of M -> Tr_C Tr_C M";
  FPModule k = ctx.side(k_name, [&] { return kernel(theta).module; });
  ctx.claim(k_name, tri(k.is_zero()), "zero");
  const std::string g_name = "G_C-dim X = 0";
  Tri g = ctx.side(g_name, [&] { return tri(gc_dimension_zero(x, c, ctx.bound(m.ring()))); });
  ctx.claim(g_name, g, "true");
  const std::string d_name = "X = 0 or depth X = depth R";
  Tri d = ctx.side(d_name, [&] { return tri(x.is_zero() || depth(x) == ring_depth(m.ring())); });
  ctx.cmp_implies(g_name, g, d_name, d);
}

void thm_2_14_chain(Ctx& ctx) {
  const FPModule& m = ctx.mod(0);
  const SemidualizingModule& c = ctx.semi(1);
  const int n = ctx.num(2);
  same_ring(m, c.module);
  if (!certified_hyp(ctx, c)) return;
  if (!ctx.hyp("n >= 1", n >= 1, "n = " + idx(n))) return;
  const std::string e_name = "Ext^i(Tr_C M, C) = 0 for 1 <= i <= n";
  const std::string w_name = "M is an n-th C-syzygy (pushforward witness)";
  const std::string s_name = "M satisfies S~_n";
  Tri e = ctx.side(e_name, [&] { return ext_vanish_range(transpose_C(m, c), c.module, 1, n); });
  Tri w = ctx.side(w_name, [&] { return c_syzygy_steps(m, c.module, n) == n ? Tri::True : Tri::Undetermined; });
  Tri s = ctx.side(s_name, [&] { return tri(satisfies_serre_exact(m, n)); });
  ctx.cmp_implies(e_name, e, w_name, w);
  if (w == Tri::True) {
    ctx.cmp_implies(w_name, w, s_name, s);
  } else {
    ctx.note("no syzygy witness: the second implication is not exercised");
  }
  std::string why;
  GcDimension g = gc_dimension(m, c, ctx.bound(m.ring()));
  if (gc_finite_locus(g, c, n - 1, why) == Tri::True) {
    ctx.cmp_iff(s_name, s, e_name, e);
  } else {
    ctx.note("converse not exercised: " + why);
  }
}

void rem_2_15_ii(Ctx& ctx) {
  const FPModule& m = ctx.mod(0);
  const SemidualizingModule& c = ctx.semi(1);
  same_ring(m, c.module);
  if (!certified_hyp(ctx, c)) return;
  std::string why;
  if (!ctx.hyp("Tr M is in A_C", in_auslander(ctx, transpose(m), c, why), why)) return;
  const FPModule r = unit(m.ring());
  for (int i = 0; i <= 3; ++i) {
    const std::string a_name = "Ext^" + idx(i) + "(Tr_C M, C)";
    const std::string b_name = "Ext^" + idx(i) + "(Tr M, R)";
    const std::string t_name = "Ext^" + idx(i) + "(Tr M (x) C, C)";
    FPModule a = ctx.side(a_name, [&] { return ext_module(i, transpose_C(m, c), c.module); });
    FPModule b = ctx.side(b_name, [&] { return ext_module(i, transpose(m), r); });
    FPModule t = ctx.side(t_name, [&] { return ext_module(i, tensor_module(transpose(m), c.module), c.module); });
    ctx.cmp_iso(a_name, a, b_name, b);
    ctx.cmp_iso(a_name, a, t_name, t);
  }
}

void lemma_2_16(Ctx& ctx) {
  const FPModule& m = ctx.mod(0);
  const SemidualizingModule& c = ctx.semi(1);
  same_ring(m, c.module);
  if (!certified_hyp(ctx, c)) return;
  if (!ctx.hyp("M != 0", !m.is_zero(), "")) return;
  std::string why;
  if (!ctx.hyp("M is in A_C", in_auslander(ctx, m, c, why), why)) return;
  int dm = ctx.side("depth M", [&] { return depth(m); });
  int dmc = ctx.side("depth M (x) C", [&] { return depth(tensor_module(m, c.module)); });
  ctx.cmp_equal("depth M", dm, "depth M (x) C", dmc);
  int km = ctx.side("dim M", [&] { return m.dimension(); });
  int kmc = ctx.side("dim M (x) C", [&] { return tensor_module(m, c.module).dimension(); });
  ctx.cmp_equal("dim M", km, "dim M (x) C", kmc);
  Tri cm = ctx.side("M is Cohen-Macaulay", [&] { return tri(depth(m) == m.dimension()); });
  Tri cmc = ctx.side("M (x) C is Cohen-Macaulay", [&] {
    FPModule t = tensor_module(m, c.module);
    return tri(depth(t) == t.dimension());
  });
  ctx.cmp_iff("M is Cohen-Macaulay", cm, "M (x) C is Cohen-Macaulay", cmc);
  ctx.note("the S_n transfer is not compared: both sides would run the same Serre test");
}

void lemma_l5(Ctx& ctx) {
  const FPModule& m = ctx.mod(0);
  const FPModule& n = ctx.mod(1);
  const SemidualizingModule& c = ctx.semi(2);
  same_ring(m, c.module);
  same_ring(n, c.module);
  if (!certified_hyp(ctx, c)) return;
  std::string why;
  if (!ctx.hyp("N is in B_C", in_bass(ctx, n, c, why), why)) return;
  const std::string l_name = "kernel and cokernel of M (x) Hom(C, N) -> Hom(Hom(M, C), N)";
  const std::string r_name = "Ext^1 and Ext^2 of Tr_C M into N";
  auto l = ctx.side(l_name, [&] {
    GradedMap e = evaluation_map(m, c.module, n);
    return std::pair{kernel(e).module, cokernel(e)};
  });
  auto r = ctx.side(r_name, [&] {
    FPModule tr = transpose_C(m, c);
    return std::pair{ext_module(1, tr, n), ext_module(2, tr, n)};
  });
  ctx.cmp_iso(l_name, l.first, r_name, r.first);
  ctx.cmp_iso(l_name, l.second, r_name, r.second);
}

}  // namespace linkhom::checks
