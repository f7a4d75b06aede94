#include "linkhom/theory/semidualizing.hpp"

#include "linkhom/errors.hpp"
#include "linkhom/modules/homological.hpp"
#include "linkhom/trace.hpp"

namespace linkhom {

const char* to_string(CertProperty p) {
  switch (p) {
    case CertProperty::Semidualizing: return "semidualizing";
    case CertProperty::GcDimZero: return "gcdim_zero";
    case CertProperty::AuslanderClass: return "auslander_class";
    case CertProperty::BassClass: return "bass_class";
    case CertProperty::InjectiveDimFinite: return "injective_dim_finite";
  }
  return "?";
}

const char* to_string(CertStatus s) {
  switch (s) {
    case CertStatus::Certified: return "certified-up-to-bound";
    case CertStatus::Refuted: return "refuted";
    case CertStatus::Undetermined: return "undetermined";
  }
  return "?";
}

int default_bound(const Ring& ring) { return ring_dimension(ring) + ring_depth(ring) + 2; }

int minimum_certifying_bound(const Ring& ring) { return ring_dimension(ring) + 1; }

SemidualizingModule is_semidualizing(const FPModule& c, int bound) {
  LH_TRACE("is_semidualizing");
  const Ring& ring = c.ring();
  if (bound < 0) bound = default_bound(ring);
  SemidualizingModule out;
  out.module = c;
  auto& cert = out.certificate;
  cert.property = CertProperty::Semidualizing;
  cert.bound = bound;
  auto refute = [&cert](int i, const FPModule& witness, std::string why) {
    cert.status = CertStatus::Refuted;
    cert.refuted_index = i;
    cert.refuted_table = report_table(witness);
    cert.evidence.push_back(std::move(why));
  };
  if (c.is_zero()) {
    cert.status = CertStatus::Refuted;
    cert.refuted_index = 0;
    cert.evidence.push_back("C = 0");
    return out;
  }
  const PolyRing& S = ring->ambient();
  HomResult hr = hom_module(c, c);
  auto coords = hr.hom.coordinates(matrix_to_hom_vector(S, identity_matrix(S, c.gen_degs())));
  if (!coords) throw ShapeError("is_semidualizing: the identity is not an endomorphism");
  Matrix h;
  h.row_degs = hr.hom.module.gen_degs();
  h.col_degs = {0};
  h.cols = {std::move(*coords)};
  GradedMap homothety = make_map(FPModule::free(ring, {0}), hr.hom.module, std::move(h));
  FPModule ker = kernel(homothety).module;
  if (!ker.is_zero()) {
    refute(0, ker, "homothety R -> Hom(C, C) is not injective");
    return out;
  }
  FPModule cok = cokernel(homothety);
  if (!cok.is_zero()) {
    refute(0, cok, "homothety R -> Hom(C, C) is not surjective");
    return out;
  }
  cert.evidence.push_back("homothety R -> Hom(C, C) is an isomorphism");
  out.homothety = homothety;
  for (int i = 1; i <= bound; ++i) {
    if (!ext_vanishes(i, c, c)) {
      refute(i, ext_module(i, c, c), "Ext^" + std::to_string(i) + "(C, C) != 0");
      return out;
    }
  }
  cert.evidence.push_back("Ext^i(C, C) = 0 for 1 <= i <= " + std::to_string(bound));
  if (bound < minimum_certifying_bound(ring)) {
    cert.status = CertStatus::Undetermined;
    cert.evidence.push_back("bound below dim R + 1");
  } else {
    cert.status = CertStatus::Certified;
  }
  return out;
}

SemidualizingModule free_semidualizing(const Ring& ring) { return is_semidualizing(FPModule::free(ring, {0})); }

bool is_cohen_macaulay_ring(const Ring& ring) { return ring_depth(ring) == ring_dimension(ring); }

FPModule canonical_module(const Ring& ring) {
  LH_TRACE("canonical_module");
  if (!is_cohen_macaulay_ring(ring)) throw PreconditionError("canonical_module: the ring is not Cohen-Macaulay");
  const PolyRing& S = ring->ambient();
  Ring poly = GradedRing::make(S, {});
  FPModule r_over_s = restrict_to_ambient(FPModule::free(ring, {0}));
  FPModule omega_s = FPModule::free(poly, {S.weight_sum()});
  const int codim = static_cast<int>(S.nvars()) - ring_dimension(ring);
  FPModule e = ext_module(codim, r_over_s, omega_s);
  return minimal_presentation(base_change(e, ring));
}

}  // namespace linkhom
