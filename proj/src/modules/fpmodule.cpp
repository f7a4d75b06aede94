#include "linkhom/modules/fpmodule.hpp"

#include "fpmodule_state.hpp"
#include "linkhom/errors.hpp"
#include "linkhom/modules/homological.hpp"

namespace linkhom {


namespace {

template <class T, class F>
const T& cached(std::mutex& mu, std::shared_ptr<const T>& slot, F compute) {
  {
    std::lock_guard<std::mutex> lock(mu);
    if (slot) return *slot;
  }
  auto value = std::make_shared<const T>(compute());
  std::lock_guard<std::mutex> lock(mu);
  if (!slot) slot = std::move(value);
  return *slot;
}

}  // namespace

FPModule::FPModule(Ring ring, Matrix relations, MinimalFlag flag) : st_(std::make_shared<State>()) {
  if (!ring) throw InputError("module without a ring");
  check_homogeneous(ring->ambient(), relations);
  st_->rel = reduce_entries(*ring, relations);
  st_->ring = std::move(ring);
  st_->flag = flag;
}

FPModule FPModule::free(Ring ring, std::vector<int> degs) {
  return FPModule(std::move(ring), zero_matrix(std::move(degs), {}), MinimalFlag::Minimal);
}

FPModule FPModule::zero(Ring ring) { return FPModule(std::move(ring), zero_matrix({}, {}), MinimalFlag::Minimal); }

FPModule FPModule::cyclic(const Ideal& a, int deg) {
  const PolyRing& S = a.ring->ambient();
  Matrix m;
  m.row_degs = {deg};
  const int zero[1] = {0};
  for (const auto& g : a.gens) {
    m.cols.push_back(g);
    m.col_degs.push_back(deg + *S.degree_of(g, zero));
  }
  return FPModule(a.ring, std::move(m));
}

const Ring& FPModule::ring() const { return st_->ring; }
const Matrix& FPModule::relations() const { return st_->rel; }
MinimalFlag FPModule::minimal_flag() const { return st_->flag.load(); }

const Submodule& FPModule::relation_module() const {
  return cached(st_->mu, st_->relmod, [this] { return Submodule(st_->ring, st_->rel.row_degs, st_->rel.cols); });
}

const HilbertSeries& FPModule::hilbert_series() const {
  return cached(st_->mu, st_->series, [this] {
    const auto& N = relation_module();
    return linkhom::hilbert_series(st_->ring->ambient(), N.degs(), N.gb());
  });
}

HilbertTable FPModule::hilbert_table(int lo, int hi) const {
  const auto& N = relation_module();
  return linkhom::hilbert_table(st_->ring->ambient(), N.degs(), N.gb(), lo, hi);
}

std::vector<FreeVector> FPModule::degree_basis(int d) const {
  const PolyRing& S = st_->ring->ambient();
  const auto& N = relation_module();
  std::vector<FreeVector> out;
  for (std::size_t c = 0; c < ngens(); ++c) {
    for (const auto& m : monomials_of_degree(S, d - gen_degs()[c])) {
      bool standard = true;
      for (const auto& g : N.gb()) {
        if (g.lead().comp == c && divides(g.lead().mono, m)) {
          standard = false;
          break;
        }
      }
      if (standard) out.push_back(FreeVector{{Term{m, static_cast<std::uint32_t>(c), S.field().from_int(1)}}});
    }
  }
  return out;
}

const Lifter& relation_lifter(const FPModule& m) {
  return cached(m.st_->mu, m.st_->lifter, [&m] { return Lifter(m.ring(), m.relations()); });
}

GradedMap make_map(const FPModule& source, const FPModule& target, Matrix matrix) {
  require_same_ring(*source.ring(), *target.ring(), "make_map");
  if (matrix.row_degs != target.gen_degs() || matrix.col_degs != source.gen_degs()) {
    throw ShapeError("map matrix does not match the generator degrees");
  }
  const GradedRing& R = *target.ring();
  check_homogeneous(R.ambient(), matrix);
  matrix = reduce_entries(R, matrix);
  Matrix witness;
  witness.row_degs = target.relations().col_degs;
  witness.col_degs = source.relations().col_degs;
  if (source.relations().ncols() > 0) {
    const Lifter& lifter = relation_lifter(target);
    for (const auto& r : source.relations().cols) {
      auto w = lifter.lift(apply(R, matrix, r));
      if (!w) throw ShapeError("matrix does not induce a homomorphism: a relation is not sent to a relation");
      witness.cols.push_back(std::move(*w));
    }
  }
  return GradedMap{source, target, std::move(matrix), std::move(witness)};
}

GradedMap identity_map(const FPModule& m) {
  Matrix w = identity_matrix(m.ring()->ambient(), m.relations().col_degs);
  return GradedMap{m, m, identity_matrix(m.ring()->ambient(), m.gen_degs()), std::move(w)};
}

GradedMap zero_map(const FPModule& source, const FPModule& target) {
  return GradedMap{source, target, zero_matrix(target.gen_degs(), source.gen_degs()),
                   zero_matrix(target.relations().col_degs, source.relations().col_degs)};
}

GradedMap compose(const GradedMap& g, const GradedMap& f) {
  if (f.target.identity() != g.source.identity() && f.target.gen_degs() != g.source.gen_degs()) {
    throw ShapeError("compose: maps are not composable");
  }
  const GradedRing& R = *f.source.ring();
  return GradedMap{f.source, g.target, multiply(R, g.matrix, f.matrix), multiply(R, g.witness, f.witness)};
}

GradedMap add_maps(const GradedMap& f, const GradedMap& g) {
  const GradedRing& R = *f.source.ring();
  return GradedMap{f.source, f.target, add_matrices(R, f.matrix, g.matrix), add_matrices(R, f.witness, g.witness)};
}

GradedMap scale_map(const GradedMap& f, const Scalar& c) {
  const PolyRing& S = f.source.ring()->ambient();
  return GradedMap{f.source, f.target, scale_matrix(S, f.matrix, c), scale_matrix(S, f.witness, c)};
}

bool is_zero_map(const GradedMap& f) {
  for (const auto& c : f.matrix.cols) {
    if (!f.target.is_zero_element(c)) return false;
  }
  return true;
}

bool maps_equal(const GradedMap& f, const GradedMap& g) {
  return is_zero_map(add_maps(f, scale_map(g, f.source.ring()->field().from_int(-1))));
}

FreeVector map_element(const GradedMap& f, const FreeVector& v) {
  return f.target.reduce(apply(*f.source.ring(), f.matrix, v));
}

std::optional<FreeVector> Subquotient::coordinates(const FreeVector& h) const { return lifter->lift(h); }

FreeVector Subquotient::represent(const FreeVector& v) const { return apply(*module.ring(), gens, v); }

Subquotient present_subquotient(const Ring& ring, const Matrix& P, const Matrix& Q) {
  if (P.row_degs != Q.row_degs) throw ShapeError("subquotient: numerator and denominator live in different modules");
  const GradedRing& R = *ring;
  auto idx = minimal_generators(R, P.row_degs, Q.cols, P.cols);
  Matrix gens = select_columns(P, idx);
  Matrix rel = kernel_modulo(R, gens, Q);
  auto ridx = minimal_generators(R, rel.row_degs, {}, rel.cols);
  Subquotient out;
  out.module = FPModule(ring, select_columns(rel, ridx), MinimalFlag::Minimal);
  out.gens = std::move(gens);
  out.modulus = Q;
  out.lifter = std::make_shared<const Lifter>(ring, out.gens, &out.modulus);
  return out;
}

FPModule cokernel(const GradedMap& f) {
  return FPModule(f.target.ring(), hstack(f.matrix, f.target.relations()));
}

Subquotient image(const GradedMap& f) { return present_subquotient(f.target.ring(), f.matrix, f.target.relations()); }

Subquotient kernel(const GradedMap& f) {
  Matrix k = kernel_modulo(*f.source.ring(), f.matrix, f.target.relations());
  return present_subquotient(f.source.ring(), k, f.source.relations());
}

FPModule direct_sum(const FPModule& a, const FPModule& b) {
  require_same_ring(*a.ring(), *b.ring(), "direct_sum");
  return FPModule(a.ring(), direct_sum(a.ring()->ambient(), a.relations(), b.relations()));
}

FPModule twist(const FPModule& m, int t) {
  if (t == 0) return m;
  return FPModule(m.ring(), shift_degrees(m.relations(), -t), m.minimal_flag());
}

}  // namespace linkhom
