#include "linkhom/theory/linkage.hpp"

#include <set>

#include "linkhom/errors.hpp"
#include "linkhom/modules/homological.hpp"
#include "linkhom/trace.hpp"

namespace linkhom {

namespace {

void require_certified(const SemidualizingModule& c, const char* what) {
  if (!c.certified()) {
    throw PreconditionError(std::string(what) + ": the module C is not certified semidualizing");
  }
}

FPModule free_ring_module(const Ring& ring) { return FPModule::free(ring, {0}); }

// Rows of `blocks` stacked: column i is the sum of the shifted columns i of each block.
Matrix stack_rows(const PolyRing& S, const std::vector<Matrix>& blocks, const std::vector<int>& col_degs) {
  Matrix out;
  out.col_degs = col_degs;
  out.cols.assign(col_degs.size(), FreeVector{});
  std::int64_t offset = 0;
  for (const auto& b : blocks) {
    out.row_degs.insert(out.row_degs.end(), b.row_degs.begin(), b.row_degs.end());
    for (std::size_t i = 0; i < col_degs.size(); ++i) {
      out.cols[i] = S.add(out.cols[i], S.shift_components(b.cols[i], offset));
    }
    offset += static_cast<std::int64_t>(b.rows());
  }
  return out;
}

}  // namespace

FPModule transpose(const FPModule& m) {
  LH_TRACE("transpose");
  FPModule mp = minimal_presentation(m);
  return FPModule(m.ring(), transpose(m.ring()->ambient(), mp.relations()));
}

FPModule transpose_C_of_presentation(const Ring& ring, const Matrix& a, const FPModule& c) {
  require_same_ring(*ring, *c.ring(), "transpose_C");
  const PolyRing& S = ring->ambient();
  Matrix rel = hstack(hom_precompose(S, a, c.gen_degs()), hom_postcompose(c.relations(), a.col_degs));
  return FPModule(ring, std::move(rel));
}

FPModule transpose_C(const FPModule& m, const FPModule& c, AllowUncertified) {
  LH_TRACE("transpose_C");
  FPModule mp = minimal_presentation(m);
  return transpose_C_of_presentation(m.ring(), mp.relations(), c);
}

FPModule transpose_C(const FPModule& m, const SemidualizingModule& c) {
  require_certified(c, "transpose_C");
  return transpose_C(m, c.module, AllowUncertified{});
}

FPModule lambda(const FPModule& m) {
  LH_TRACE("lambda");
  return syzygy(transpose(m));
}

FPModule lambda_C(const FPModule& m, const FPModule& c, AllowUncertified) {
  LH_TRACE("lambda_C");
  require_same_ring(*m.ring(), *c.ring(), "lambda_C");
  FPModule mp = minimal_presentation(m);
  const Matrix& a = mp.relations();
  const PolyRing& S = m.ring()->ambient();
  return present_subquotient(m.ring(), hom_precompose(S, a, c.gen_degs()), hom_postcompose(c.relations(), a.col_degs))
      .module;
}

FPModule lambda_C(const FPModule& m, const SemidualizingModule& c) {
  require_certified(c, "lambda_C");
  return lambda_C(m, c.module, AllowUncertified{});
}

bool is_stable(const FPModule& m) {
  LH_TRACE("is_stable");
  if (m.is_zero()) return true;
  FPModule mp = minimal_presentation(m);
  const PolyRing& S = m.ring()->ambient();
  std::set<int> degs(mp.gen_degs().begin(), mp.gen_degs().end());
  for (int a : degs) {
    HomResult hr = hom_module(mp, FPModule::free(m.ring(), {a}));
    if (hr.degree0_basis.empty()) continue;
    auto elems = mp.degree_basis(a);
    for (const auto& phi : hr.degree0_basis) {
      for (const auto& x : elems) {
        FreeVector y = map_element(phi, x);
        if (S.constant_term(S.component(y, 0)) != 0) return false;
      }
    }
  }
  return true;
}

const char* to_string(LinkageStatus s) {
  switch (s) {
    case LinkageStatus::Linked: return "linked";
    case LinkageStatus::NotLinked: return "not linked";
    case LinkageStatus::Undetermined: return "undetermined";
    case LinkageStatus::Inconsistent: return "inconsistent";
  }
  return "?";
}

LinkageCertificate certify_horizontal_linkage(const FPModule& m, const IsoOptions& opts) {
  LH_TRACE("certify_horizontal_linkage");
  LinkageCertificate out;
  out.module = m;
  out.lambda_module = lambda(m);
  out.lambda_squared = lambda(out.lambda_module);
  IsoOptions o = opts;
  o.allow_twist = true;
  out.iso_witness = is_isomorphic(m, out.lambda_squared, o);
  out.stability_verdict = is_stable(m);
  out.ext1_tr_vanishes = ext_vanishes(1, transpose(m), free_ring_module(m.ring()));
  const bool criterion = out.stability_verdict && out.ext1_tr_vanishes;
  if (out.iso_witness.status == IsoStatus::Undetermined) {
    out.status = LinkageStatus::Undetermined;
    out.diagnostic = "isomorphism M ~ lambda^2 M undetermined: " + out.iso_witness.reason;
  } else if ((out.iso_witness.status == IsoStatus::Yes) == criterion) {
    out.status = criterion ? LinkageStatus::Linked : LinkageStatus::NotLinked;
  } else {
    out.status = LinkageStatus::Inconsistent;
    out.diagnostic = std::string("M ~ lambda^2 M is ") + to_string(out.iso_witness.status) + " but stable = " +
                     (out.stability_verdict ? "true" : "false") +
                     ", Ext^1(Tr M, R) = 0 is " + (out.ext1_tr_vanishes ? "true" : "false");
  }
  return out;
}

Pushforward pushforward_map(const FPModule& m, const FPModule& c) {
  LH_TRACE("universal_pushforward");
  require_same_ring(*m.ring(), *c.ring(), "pushforward");
  const PolyRing& S = m.ring()->ambient();
  HomResult hr = hom_module(m, c);
  const Matrix& gens = hr.hom.gens;
  Pushforward out;
  std::vector<Matrix> blocks;
  FPModule target = FPModule::zero(m.ring());
  for (std::size_t j = 0; j < gens.ncols(); ++j) {
    const int delta = gens.col_degs[j];
    Matrix block = hom_vector_to_matrix(S, gens.cols[j], m.gen_degs(), c.gen_degs());
    block = shift_degrees(block, -delta);
    block.col_degs = m.gen_degs();
    blocks.push_back(std::move(block));
    FPModule part = twist(c, delta);
    target = j == 0 ? part : direct_sum(target, part);
    out.twists.push_back(delta);
  }
  Matrix f = stack_rows(S, blocks, m.gen_degs());
  out.map = make_map(m, target, std::move(f));
  out.cokernel = cokernel(out.map);
  out.injective = kernel(out.map).module.is_zero();
  out.ext1_cokernel_vanishes = ext_vanishes(1, out.cokernel, c);
  return out;
}

Pushforward universal_pushforward(const FPModule& m, const SemidualizingModule& c) {
  require_certified(c, "universal_pushforward");
  FPModule tr = transpose_C(m, c);
  if (!ext_vanishes(1, tr, c.module)) {
    throw PushforwardObstructed("universal pushforward obstructed: Ext^1(Tr_C M, C) != 0",
                                report_table(ext_module(1, tr, c.module)));
  }
  return pushforward_map(m, c.module);
}

int c_syzygy_steps(const FPModule& m, const FPModule& c, int n) {
  LH_TRACE("c_syzygy");
  FPModule cur = m;
  for (int s = 0; s < n; ++s) {
    if (cur.is_zero()) return n;
    Pushforward pf = pushforward_map(cur, c);
    if (!pf.injective) return s;
    cur = pf.cokernel;
  }
  return n;
}

IdealLink link_ideal(const Ideal& c, const Ideal& I) {
  LH_TRACE("link_ideal");
  if (!c.ring->same_as(*I.ring)) throw InputError("link_ideal: ideals live in different rings");
  if (!ideal_contains(I, c)) throw InputError("link_ideal: the linking ideal is not contained in I");
  IdealLink out{c, I, colon_ideal(c, I), false};
  out.verified = ideal_equal(colon_ideal(c, out.J), I);
  return out;
}

FPModule stable_hom(const FPModule& m, const FPModule& n) {
  LH_TRACE("stable_hom");
  return tor_module(1, transpose(m), n);
}

FPModule stable_hom_direct(const FPModule& m, const FPModule& n) {
  LH_TRACE("stable_hom_direct");
  require_same_ring(*m.ring(), *n.ring(), "stable_hom_direct");
  const GradedRing& R = *m.ring();
  const PolyRing& S = R.ambient();
  if (m.ngens() == 0 || n.ngens() == 0) return FPModule::zero(m.ring());
  const Matrix& a = m.relations();
  const auto& c = n.gen_degs();
  const auto hdegs = hom_free_degs(m.gen_degs(), c);
  Matrix cycles, through_free;
  if (a.ncols() == 0) {
    cycles = identity_matrix(S, hdegs);
    through_free = cycles;
  } else {
    Matrix pre = hom_precompose(S, a, c);
    cycles = kernel_modulo(R, pre, hom_postcompose(n.relations(), a.col_degs));
    through_free = kernel_modulo(R, pre, zero_matrix(hom_free_degs(a.col_degs, c), {}));
  }
  Matrix modulus = hstack(through_free, hom_postcompose(n.relations(), m.gen_degs()));
  return present_subquotient(m.ring(), cycles, modulus).module;
}

GradedMap double_transpose_map(const FPModule& m, const FPModule& c) {
  LH_TRACE("double_transpose");
  require_same_ring(*m.ring(), *c.ring(), "double_transpose_map");
  const PolyRing& S = m.ring()->ambient();
  FPModule mp = minimal_presentation(m);
  FPModule n = transpose_C_of_presentation(m.ring(), mp.relations(), c);
  FPModule t = transpose_C_of_presentation(m.ring(), n.relations(), c);
  const std::size_t g = c.ngens();
  Matrix f;
  f.row_degs = t.gen_degs();
  f.col_degs = mp.gen_degs();
  for (std::size_t i = 0; i < mp.ngens(); ++i) {
    std::vector<Term> terms;
    for (std::size_t j = 0; j < g; ++j) {
      terms.push_back(Term{S.one(), static_cast<std::uint32_t>((i * g + j) * g + j), S.field().from_int(1)});
    }
    f.cols.push_back(normalize_terms(S.field(), std::move(terms)));
  }
  return make_map(mp, t, std::move(f));
}

GradedMap bidual_map(const FPModule& m, const FPModule& c) {
  LH_TRACE("bidual_map");
  require_same_ring(*m.ring(), *c.ring(), "bidual_map");
  const PolyRing& S = m.ring()->ambient();
  HomResult h1 = hom_module(m, c);
  HomResult h2 = hom_module(h1.hom.module, c);
  const std::size_t g = c.ngens();
  std::vector<Matrix> psi;
  for (const auto& col : h1.hom.gens.cols) psi.push_back(hom_vector_to_matrix(S, col, m.gen_degs(), c.gen_degs()));
  Matrix f;
  f.row_degs = h2.hom.module.gen_degs();
  f.col_degs = m.gen_degs();
  for (std::size_t i = 0; i < m.ngens(); ++i) {
    FreeVector v;
    for (std::size_t t = 0; t < psi.size(); ++t) {
      v = S.add(v, S.shift_components(psi[t].cols[i], static_cast<std::int64_t>(t * g)));
    }
    auto coords = h2.hom.coordinates(v);
    if (!coords) throw ShapeError("bidual_map: evaluation is not a homomorphism");
    f.cols.push_back(std::move(*coords));
  }
  return make_map(m, h2.hom.module, std::move(f));
}

GradedMap evaluation_map(const FPModule& m, const FPModule& c, const FPModule& n) {
  LH_TRACE("evaluation_map");
  require_same_ring(*m.ring(), *c.ring(), "evaluation_map");
  require_same_ring(*m.ring(), *n.ring(), "evaluation_map");
  const GradedRing& R = *m.ring();
  const PolyRing& S = R.ambient();
  HomResult hcn = hom_module(c, n);
  HomResult hmc = hom_module(m, c);
  HomResult target = hom_module(hmc.hom.module, n);
  FPModule source = tensor_module(m, hcn.hom.module);
  std::vector<Matrix> psi, phi;
  for (const auto& col : hcn.hom.gens.cols) psi.push_back(hom_vector_to_matrix(S, col, c.gen_degs(), n.gen_degs()));
  for (const auto& col : hmc.hom.gens.cols) phi.push_back(hom_vector_to_matrix(S, col, m.gen_degs(), c.gen_degs()));
  const std::size_t g = n.ngens();
  Matrix f;
  f.row_degs = target.hom.module.gen_degs();
  f.col_degs = source.gen_degs();
  for (std::size_t i = 0; i < m.ngens(); ++i) {
    for (std::size_t t = 0; t < psi.size(); ++t) {
      FreeVector v;
      for (std::size_t u = 0; u < phi.size(); ++u) {
        FreeVector w = apply(R, psi[t], phi[u].cols[i]);
        v = S.add(v, S.shift_components(w, static_cast<std::int64_t>(u * g)));
      }
      auto coords = target.hom.coordinates(v);
      if (!coords) throw ShapeError("evaluation_map: evaluation is not a homomorphism");
      f.cols.push_back(std::move(*coords));
    }
  }
  return make_map(source, target.hom.module, std::move(f));
}

}  // namespace linkhom
