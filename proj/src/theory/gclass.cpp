#include "linkhom/theory/gclass.hpp"

#include <algorithm>

#include "linkhom/errors.hpp"
#include "linkhom/modules/homological.hpp"
#include "linkhom/theory/linkage.hpp"
#include "linkhom/trace.hpp"

namespace linkhom {

namespace {

int resolve_bound(const Ring& ring, int bound) { return bound < 0 ? default_bound(ring) : bound; }

void require_certified(const SemidualizingModule& c, const char* what) {
  if (!c.certified()) throw PreconditionError(std::string(what) + ": the module C is not certified semidualizing");
}

void refute(BoundedCertificate& cert, int i, const FPModule& witness, std::string why) {
  cert.status = CertStatus::Refuted;
  cert.refuted_index = i;
  cert.refuted_table = report_table(witness);
  cert.evidence.push_back(std::move(why));
}

std::string idx(int i) { return std::to_string(i); }

// Vanishing up to a bound below dim R + 1 is too little evidence to certify.
void settle(BoundedCertificate& cert, const Ring& ring) {
  if (cert.bound < minimum_certifying_bound(ring)) {
    cert.status = CertStatus::Undetermined;
    cert.evidence.push_back("bound below dim R + 1");
  } else {
    cert.status = CertStatus::Certified;
  }
}

}  // namespace

std::string ScanResult::to_string() const {
  return index ? std::to_string(*index) : "inf(bound " + std::to_string(bound) + ")";
}

BoundedCertificate gc_dimension_zero(const FPModule& x, const SemidualizingModule& c, int bound) {
  LH_TRACE("gc_dimension_zero");
  BoundedCertificate cert;
  cert.property = CertProperty::GcDimZero;
  cert.bound = resolve_bound(x.ring(), bound);
  FPModule tr = transpose_C(x, c);
  for (int i = 1; i <= cert.bound; ++i) {
    if (!ext_vanishes(i, x, c.module)) {
      refute(cert, i, ext_module(i, x, c.module), "Ext^" + idx(i) + "(X, C) != 0");
      return cert;
    }
    if (!ext_vanishes(i, tr, c.module)) {
      refute(cert, i, ext_module(i, tr, c.module), "Ext^" + idx(i) + "(Tr_C X, C) != 0");
      return cert;
    }
  }
  cert.evidence.push_back("Ext^i(X, C) = 0 = Ext^i(Tr_C X, C) for 1 <= i <= " + idx(cert.bound));
  settle(cert, x.ring());
  return cert;
}

const char* to_string(GcDimStatus s) {
  switch (s) {
    case GcDimStatus::Finite: return "finite";
    case GcDimStatus::Infinite: return "infinite";
    case GcDimStatus::Undetermined: return "undetermined";
    case GcDimStatus::ZeroModule: return "zero-module";
  }
  return "?";
}

GcDimension gc_dimension(const FPModule& m, const SemidualizingModule& c, int bound) {
  LH_TRACE("gc_dimension");
  require_certified(c, "gc_dimension");
  GcDimension out;
  out.bound = resolve_bound(m.ring(), bound);
  if (m.is_zero()) {
    out.status = GcDimStatus::ZeroModule;
    return out;
  }
  const int depth_r = ring_depth(m.ring());
  out.depth_formula = depth_r - depth(m);
  for (int i = 0; i <= out.bound; ++i) {
    if (!ext_vanishes(i, m, c.module)) out.sup_ext = i;
  }
  out.status = GcDimStatus::Undetermined;
  for (int n = 0; n <= depth_r; ++n) {
    FPModule x = n == 0 ? m : syzygy(m, n);
    BoundedCertificate cert = gc_dimension_zero(x, c, out.bound);
    if (cert.certified()) {
      out.status = GcDimStatus::Finite;
      out.value = n;
      break;
    }
    if (n == depth_r) {
      if (cert.refuted()) {
        out.status = GcDimStatus::Infinite;
      } else {
        out.diagnostic = "no certificate for the syzygy at depth R";
      }
    }
  }
  if (out.finite()) {
    if (out.value != out.depth_formula) {
      out.consistent = false;
      out.diagnostic = "G_C-dimension " + idx(out.value) + " but depth R - depth M = " + idx(out.depth_formula);
    } else if (out.value <= out.bound && out.sup_ext != out.value) {
      out.consistent = false;
      out.diagnostic = "G_C-dimension " + idx(out.value) + " but sup{i : Ext^i(M, C) != 0} = " + idx(out.sup_ext);
    }
  }
  return out;
}

int grade(const FPModule& m) {
  LH_TRACE("grade");
  if (m.is_zero()) throw PreconditionError("grade of the zero module");
  FPModule r = FPModule::free(m.ring(), {0});
  const int top = ring_depth(m.ring());
  for (int i = 0; i <= top; ++i) {
    if (!ext_vanishes(i, m, r)) return i;
  }
  throw std::logic_error("grade exceeds depth R");
}

ScanResult reduced_grade(const FPModule& m, const FPModule& c, int bound) {
  LH_TRACE("reduced_grade");
  ScanResult out;
  out.bound = resolve_bound(m.ring(), bound);
  for (int i = 1; i <= out.bound; ++i) {
    if (!ext_vanishes(i, m, c)) {
      out.index = i;
      break;
    }
  }
  return out;
}

ScanResult relative_reduced_grade(const FPModule& m, const SemidualizingModule& c, int bound) {
  LH_TRACE("relative_reduced_grade");
  require_certified(c, "relative_reduced_grade");
  ScanResult out;
  out.bound = resolve_bound(m.ring(), bound);
  FPModule mc = tensor_module(m, c.module);
  FPModule rc = tensor_module(FPModule::free(m.ring(), {0}), c.module);
  for (int i = 1; i <= out.bound; ++i) {
    if (!ext_vanishes(i, mc, rc)) {
      out.index = i;
      break;
    }
  }
  return out;
}

GradedMap auslander_map(const FPModule& m, const FPModule& c) {
  LH_TRACE("auslander_map");
  const PolyRing& S = m.ring()->ambient();
  FPModule t = tensor_module(m, c);
  HomResult h = hom_module(c, t);
  const std::size_t g = c.ngens();
  const std::size_t tn = t.ngens();
  Matrix f;
  f.row_degs = h.hom.module.gen_degs();
  f.col_degs = m.gen_degs();
  for (std::size_t p = 0; p < m.ngens(); ++p) {
    std::vector<Term> terms;
    for (std::size_t j = 0; j < g; ++j) {
      terms.push_back(Term{S.one(), static_cast<std::uint32_t>(j * tn + p * g + j), S.field().from_int(1)});
    }
    auto coords = h.hom.coordinates(normalize_terms(S.field(), std::move(terms)));
    if (!coords) throw ShapeError("auslander_map: image is not a homomorphism");
    f.cols.push_back(std::move(*coords));
  }
  return make_map(m, h.hom.module, std::move(f));
}

GradedMap bass_map(const FPModule& m, const FPModule& c) {
  LH_TRACE("bass_map");
  const PolyRing& S = m.ring()->ambient();
  HomResult h = hom_module(c, m);
  const FPModule& hm = h.hom.module;
  FPModule source = tensor_module(c, hm);
  const std::size_t s = hm.ngens();
  Matrix f;
  f.row_degs = m.gen_degs();
  f.col_degs = source.gen_degs();
  f.cols.assign(c.ngens() * s, FreeVector{});
  for (std::size_t t = 0; t < s; ++t) {
    Matrix ht = hom_vector_to_matrix(S, h.hom.gens.cols[t], c.gen_degs(), m.gen_degs());
    for (std::size_t j = 0; j < c.ngens(); ++j) f.cols[j * s + t] = ht.cols[j];
  }
  return make_map(source, m, std::move(f));
}

BoundedCertificate in_auslander_class(const FPModule& m, const SemidualizingModule& c, int bound) {
  LH_TRACE("in_auslander_class");
  require_certified(c, "in_auslander_class");
  BoundedCertificate cert;
  cert.property = CertProperty::AuslanderClass;
  cert.bound = resolve_bound(m.ring(), bound);
  GradedMap mu = auslander_map(m, c.module);
  if (FPModule k = kernel(mu).module; !k.is_zero()) {
    refute(cert, 0, k, "mu : M -> Hom(C, M (x) C) is not injective");
    return cert;
  }
  if (FPModule k = cokernel(mu); !k.is_zero()) {
    refute(cert, 0, k, "mu : M -> Hom(C, M (x) C) is not surjective");
    return cert;
  }
  cert.evidence.push_back("mu : M -> Hom(C, M (x) C) is an isomorphism");
  FPModule t = tensor_module(m, c.module);
  for (int i = 1; i <= cert.bound; ++i) {
    if (!tor_vanishes(i, m, c.module)) {
      refute(cert, i, tor_module(i, m, c.module), "Tor_" + idx(i) + "(M, C) != 0");
      return cert;
    }
    if (!ext_vanishes(i, c.module, t)) {
      refute(cert, i, ext_module(i, c.module, t), "Ext^" + idx(i) + "(C, M (x) C) != 0");
      return cert;
    }
  }
  cert.evidence.push_back("Tor_i(M, C) = 0 = Ext^i(C, M (x) C) for 1 <= i <= " + idx(cert.bound));
  settle(cert, m.ring());
  return cert;
}

BoundedCertificate in_bass_class(const FPModule& m, const SemidualizingModule& c, int bound) {
  LH_TRACE("in_bass_class");
  require_certified(c, "in_bass_class");
  BoundedCertificate cert;
  cert.property = CertProperty::BassClass;
  cert.bound = resolve_bound(m.ring(), bound);
  GradedMap ev = bass_map(m, c.module);
  if (FPModule k = kernel(ev).module; !k.is_zero()) {
    refute(cert, 0, k, "evaluation C (x) Hom(C, M) -> M is not injective");
    return cert;
  }
  if (FPModule k = cokernel(ev); !k.is_zero()) {
    refute(cert, 0, k, "evaluation C (x) Hom(C, M) -> M is not surjective");
    return cert;
  }
  cert.evidence.push_back("evaluation C (x) Hom(C, M) -> M is an isomorphism");
  FPModule hm = hom_module(c.module, m).hom.module;
  for (int i = 1; i <= cert.bound; ++i) {
    if (!ext_vanishes(i, c.module, m)) {
      refute(cert, i, ext_module(i, c.module, m), "Ext^" + idx(i) + "(C, M) != 0");
      return cert;
    }
    if (!tor_vanishes(i, hm, c.module)) {
      refute(cert, i, tor_module(i, hm, c.module), "Tor_" + idx(i) + "(Hom(C, M), C) != 0");
      return cert;
    }
  }
  cert.evidence.push_back("Ext^i(C, M) = 0 = Tor_i(Hom(C, M), C) for 1 <= i <= " + idx(cert.bound));
  settle(cert, m.ring());
  return cert;
}

FPModule relative_ext(int i, const FPModule& m, const FPModule& n, const SemidualizingModule& c) {
  LH_TRACE("relative_ext");
  require_certified(c, "relative_ext");
  return ext_module(i, tensor_module(m, c.module), tensor_module(n, c.module));
}

SerreVerdict serre_condition(const FPModule& m, const SemidualizingModule& c, int n) {
  LH_TRACE("serre_condition");
  if (n < 0) throw InputError("serre_condition: n must be nonnegative");
  SerreVerdict out;
  out.n = n;
  FPModule tr = transpose_C(m, c);
  out.criterion = true;
  for (int i = 1; i <= n; ++i) {
    if (!ext_vanishes(i, tr, c.module)) {
      out.criterion = false;
      out.failing_index = i;
      break;
    }
  }
  const int dm = depth(m);
  out.depth_at_maximal = dm == kInfinity || dm >= std::min(n, ring_depth(m.ring()));
  if (is_cohen_macaulay_ring(m.ring())) out.exact = satisfies_serre_exact(m, n);
  return out;
}

bool satisfies_serre_exact(const FPModule& m, int n) {
  LH_TRACE("serre_exact");
  FPModule omega = canonical_module(m.ring());
  const int d = ring_dimension(m.ring());
  for (int t = 1; t <= d; ++t) {
    FPModule e = ext_module(t, m, omega);
    if (!e.is_zero() && e.dimension() > d - t - n) return false;
  }
  return true;
}

bool is_maximal_cohen_macaulay(const FPModule& m) {
  LH_TRACE("is_maximal_cohen_macaulay");
  if (m.is_zero()) return true;
  return depth(m) >= ring_dimension(m.ring());
}

bool is_generalized_cohen_macaulay(const FPModule& m) {
  LH_TRACE("is_generalized_cohen_macaulay");
  if (m.is_zero()) return true;
  FPModule omega = canonical_module(m.ring());
  const int d = ring_dimension(m.ring());
  for (int t = d - m.dimension() + 1; t <= d; ++t) {
    if (!ext_module(t, m, omega).finite_length()) return false;
  }
  return true;
}

FPModule local_cohomology_dual(const FPModule& m, int i) {
  LH_TRACE("local_cohomology");
  const int d = ring_dimension(m.ring());
  if (i < 0 || i > d) throw InputError("local cohomology index out of range");
  return ext_module(d - i, m, canonical_module(m.ring()));
}

HilbertTable local_cohomology_hilbert(const FPModule& m, int i, int lo, int hi) {
  return local_cohomology_dual(m, i).hilbert_table(-hi, -lo).reversed();
}

FPModule torsion_submodule(const FPModule& m) {
  LH_TRACE("torsion_submodule");
  const Ring& ring = m.ring();
  const PolyRing& S = ring->ambient();
  if (m.is_zero()) return m;
  Ideal mm = maximal_ideal(ring);
  Ideal power = mm;
  const int zero[1] = {0};
  std::optional<HilbertSeries> prev;
  for (int t = 1; t <= 64; ++t) {
    auto gens = canonical_gens(power);
    const std::size_t r = m.ngens();
    FPModule target = FPModule::zero(ring);
    Matrix f;
    f.col_degs = m.gen_degs();
    f.cols.assign(r, FreeVector{});
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const int dg = *S.degree_of(gens[k], zero);
      FPModule part = twist(m, dg);
      target = k == 0 ? part : direct_sum(target, part);
      for (std::size_t i = 0; i < r; ++i) {
        f.cols[i] = S.add(f.cols[i], S.embed(gens[k], static_cast<std::uint32_t>(k * r + i)));
      }
    }
    f.row_degs = target.gen_degs();
    FPModule gamma = kernel(make_map(m, target, std::move(f))).module;
    if (prev && *prev == gamma.hilbert_series()) return gamma;
    prev = gamma.hilbert_series();
    power = ideal_product(power, mm);
  }
  throw std::logic_error("torsion_submodule: the chain did not stabilize");
}

GcPerfectData gc_perfect_ideal_data(const Ideal& a, const SemidualizingModule& c, int bound) {
  LH_TRACE("gc_perfect_ideal");
  require_certified(c, "gc_perfect_ideal_data");
  if (is_unit_ideal(a)) throw InputError("gc_perfect_ideal_data: the ideal is the unit ideal");
  GcPerfectData out;
  out.quotient = quotient_ring(a);
  FPModule ra = FPModule::cyclic(a, 0);
  out.grade = grade(ra);
  out.gc_dim = gc_dimension(ra, c, bound);
  out.perfect = out.gc_dim.finite() && out.gc_dim.value == out.grade;
  FPModule e = ext_module(out.grade, ra, c.module);
  out.K = minimal_presentation(base_change(e, out.quotient));
  out.K_certificate = is_semidualizing(out.K);
  if (out.K.ngens() == 1) {
    IsoOptions o;
    o.allow_twist = true;
    out.gorenstein_iso = is_isomorphic(out.K, FPModule::free(out.quotient, {0}), o);
    out.gorenstein = out.gorenstein_iso->status == IsoStatus::Yes;
  }
  out.certified = out.perfect && out.K_certificate.certified();
  out.report = "grade " + idx(out.grade) + ", G_C-dimension " +
               (out.gc_dim.finite() ? idx(out.gc_dim.value) : std::string(to_string(out.gc_dim.status))) +
               ", K " + to_string(out.K_certificate.certificate.status);
  return out;
}

GolodReport golod_functor_check(const GcPerfectData& data, const SemidualizingModule& c, const FPModule& mq, int max_i,
                                const IsoOptions& opts) {
  LH_TRACE("golod_functor_check");
  GolodReport out;
  const Ring& base = c.module.ring();
  FPModule m_r = restrict_scalars(mq, base);
  out.pass = true;
  for (int i = 0; i <= max_i; ++i) {
    GolodRow row;
    row.i = i;
    FPModule left = restrict_scalars(ext_module(i, mq, data.K), base);
    FPModule right = ext_module(data.grade + i, m_r, c.module);
    auto [lt, rt] = comparison_tables(left, right);
    row.left = lt;
    row.right = rt;
    row.tables_agree = left.hilbert_series() == right.hilbert_series();
    IsoOptions o = opts;
    o.allow_twist = false;
    row.iso = is_isomorphic(left, right, o).status;
    out.pass = out.pass && row.tables_agree && row.iso == IsoStatus::Yes;
    out.rows.push_back(std::move(row));
  }
  if (data.K_certificate.certified()) {
    GcDimension over_r = gc_dimension(m_r, c);
    GcDimension over_q = gc_dimension(mq, data.K_certificate);
    if (over_r.finite() && over_q.finite()) out.shift_formula = over_r.value == data.grade + over_q.value;
  }
  if (out.shift_formula && !*out.shift_formula) out.pass = false;
  return out;
}

}  // namespace linkhom
