#include "linkhom/modules/homological.hpp"

#include <algorithm>

#include "fpmodule_state.hpp"
#include "linkhom/errors.hpp"

namespace linkhom {

namespace {

bool is_constant_term(const Term& t) { return t.mono.is_one(); }

}  // namespace

// Postcomposition with B : G1 -> G0 on Hom(F, -): column (i, l) is sum_j B_{jl} e_{(i, j)}.
Matrix hom_postcompose(const Matrix& B, const std::vector<int>& a) {
  const std::size_t g0 = B.rows(), g1 = B.ncols();
  Matrix out;
  out.row_degs = hom_free_degs(a, B.row_degs);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t l = 0; l < g1; ++l) {
      FreeVector v;
      for (const auto& t : B.cols[l].terms) v.terms.push_back(Term{t.mono, static_cast<std::uint32_t>(i * g0 + t.comp), t.coeff});
      out.cols.push_back(std::move(v));
      out.col_degs.push_back(B.col_degs[l] - a[i]);
    }
  }
  return out;
}

// Precomposition with A : F1 -> F0 as a map Hom(F0, G) -> Hom(F1, G): column (i, j) is sum_k A_{ik} e_{(k, j)}.
Matrix hom_precompose(const PolyRing& S, const Matrix& A, const std::vector<int>& c) {
  const std::size_t f0 = A.rows(), f1 = A.ncols(), g = c.size();
  std::vector<std::vector<Term>> cols(f0 * g);
  for (std::size_t k = 0; k < f1; ++k) {
    for (const auto& t : A.cols[k].terms) {
      for (std::size_t j = 0; j < g; ++j) cols[t.comp * g + j].push_back(Term{t.mono, static_cast<std::uint32_t>(k * g + j), t.coeff});
    }
  }
  Matrix out;
  out.row_degs = hom_free_degs(A.col_degs, c);
  out.col_degs = hom_free_degs(A.row_degs, c);
  for (auto& col : cols) out.cols.push_back(normalize_terms(S.field(), std::move(col)));
  return out;
}

// A (x) 1_G for A : F1 -> F0: column (p, j) is sum_q A_{qp} e_{(q, j)}.
Matrix tensor_left(const Matrix& A, const std::vector<int>& c) {
  const std::size_t g = c.size();
  Matrix out;
  out.row_degs = tensor_free_degs(A.row_degs, c);
  for (std::size_t p = 0; p < A.ncols(); ++p) {
    for (std::size_t j = 0; j < g; ++j) {
      FreeVector v;
      for (const auto& t : A.cols[p].terms) v.terms.push_back(Term{t.mono, static_cast<std::uint32_t>(t.comp * g + j), t.coeff});
      out.cols.push_back(std::move(v));
      out.col_degs.push_back(A.col_degs[p] + c[j]);
    }
  }
  return out;
}

// 1_F (x) B for B : G1 -> G0: column (p, l) is sum_j B_{jl} e_{(p, j)}.
Matrix tensor_right(const std::vector<int>& a, const Matrix& B) {
  const std::size_t g0 = B.rows();
  Matrix out;
  out.row_degs = tensor_free_degs(a, B.row_degs);
  for (std::size_t p = 0; p < a.size(); ++p) {
    for (std::size_t l = 0; l < B.ncols(); ++l) {
      FreeVector v;
      for (const auto& t : B.cols[l].terms) v.terms.push_back(Term{t.mono, static_cast<std::uint32_t>(p * g0 + t.comp), t.coeff});
      out.cols.push_back(std::move(v));
      out.col_degs.push_back(a[p] + B.col_degs[l]);
    }
  }
  return out;
}

namespace {

Matrix empty_columns(std::vector<int> rows) { return zero_matrix(std::move(rows), {}); }

// Cycles and boundaries of Hom(F_., N) at i, as submodules of Hom(F_i, G0).
std::pair<Matrix, Matrix> ext_data(int i, const FPModule& m, const FPModule& n) {
  if (i < 0) throw InputError("Ext index must be non-negative");
  require_same_ring(*m.ring(), *n.ring(), "Ext");
  const GradedRing& R = *m.ring();
  const PolyRing& S = R.ambient();
  auto res = resolution_prefix(m, i + 1);
  const Matrix& B = n.relations();
  const auto& c = n.gen_degs();
  const int len = res->length();
  if (i > len || (i == len && res->finite)) {
    std::vector<int> none;
    return {empty_columns(hom_free_degs(none, c)), empty_columns(hom_free_degs(none, c))};
  }
  const auto& ai = res->modules[static_cast<std::size_t>(i)];
  auto hdegs = hom_free_degs(ai, c);
  Matrix Z;
  if (i < len && res->differentials[static_cast<std::size_t>(i)].ncols() > 0) {
    const Matrix& next = res->differentials[static_cast<std::size_t>(i)];
    Z = kernel_modulo(R, hom_precompose(S, next, c), hom_postcompose(B, next.col_degs));
  } else {
    Z = identity_matrix(S, hdegs);
  }
  Matrix bnd = hom_postcompose(B, ai);
  if (i > 0) bnd = hstack(hom_precompose(S, res->differentials[static_cast<std::size_t>(i - 1)], c), bnd);
  return {std::move(Z), std::move(bnd)};
}

std::pair<Matrix, Matrix> tor_data(int i, const FPModule& m, const FPModule& n) {
  if (i < 0) throw InputError("Tor index must be non-negative");
  require_same_ring(*m.ring(), *n.ring(), "Tor");
  const GradedRing& R = *m.ring();
  const PolyRing& S = R.ambient();
  auto res = resolution_prefix(m, i + 1);
  const Matrix& B = n.relations();
  const auto& c = n.gen_degs();
  const int len = res->length();
  if (i > len || (i == len && res->finite)) {
    std::vector<int> none;
    return {empty_columns(tensor_free_degs(none, c)), empty_columns(tensor_free_degs(none, c))};
  }
  const auto& ai = res->modules[static_cast<std::size_t>(i)];
  auto tdegs = tensor_free_degs(ai, c);
  Matrix Z;
  if (i == 0) {
    Z = identity_matrix(S, tdegs);
  } else {
    const Matrix& d = res->differentials[static_cast<std::size_t>(i - 1)];
    Z = kernel_modulo(R, tensor_left(d, c), tensor_right(d.row_degs, B));
  }
  Matrix bnd = tensor_right(ai, B);
  if (i < len) bnd = hstack(tensor_left(res->differentials[static_cast<std::size_t>(i)], c), bnd);
  return {std::move(Z), std::move(bnd)};
}

bool subquotient_vanishes(const Ring& ring, const Matrix& Z, const Matrix& bnd) {
  if (Z.ncols() == 0) return true;
  Submodule b(ring, bnd.row_degs, bnd.cols);
  for (const auto& z : Z.cols) {
    if (!b.contains(z)) return false;
  }
  return true;
}

}  // namespace

MinimalPresentation minimal_presentation_data(const FPModule& m) {
  LH_TRACE("minimal_presentation");
  const PolyRing& S = m.ring()->ambient();
  if (m.minimal_flag() == MinimalFlag::Minimal) {
    return MinimalPresentation{m, identity_matrix(S, m.gen_degs()), identity_matrix(S, m.gen_degs())};
  }
  {
    std::lock_guard<std::mutex> lock(m.st_->mu);
    if (m.st_->minpres) return *m.st_->minpres;
  }
  const GradedRing& R = *m.ring();
  std::vector<int> degs = m.gen_degs();
  std::vector<FreeVector> cols;
  std::vector<int> col_degs;
  bool changed = false;
  for (std::size_t j = 0; j < m.relations().ncols(); ++j) {
    FreeVector v = R.reduce(m.relations().cols[j]);
    if (v.is_zero()) {
      changed = true;
      continue;
    }
    cols.push_back(std::move(v));
    col_degs.push_back(m.relations().col_degs[j]);
  }
  // to_new[i] = image of old generator i in the current basis.
  std::vector<FreeVector> to_new;
  for (std::size_t i = 0; i < degs.size(); ++i) to_new.push_back(S.embed(S.constant(1), static_cast<std::uint32_t>(i)));
  std::vector<std::size_t> orig(degs.size());
  for (std::size_t i = 0; i < orig.size(); ++i) orig[i] = i;

  for (;;) {
    std::size_t pc = cols.size();
    std::uint32_t pr = 0;
    Scalar pa;
    for (std::size_t j = 0; j < cols.size() && pc == cols.size(); ++j) {
      for (const auto& t : cols[j].terms) {
        if (is_constant_term(t)) {
          pc = j;
          pr = t.comp;
          pa = t.coeff;
          break;
        }
      }
    }
    if (pc == cols.size()) break;
    changed = true;
    const FreeVector pivot = cols[pc];
    auto eliminate = [&](FreeVector& v) {
      Poly e = S.component(v, pr);
      if (e.is_zero()) return;
      Poly q = S.scale(e, S.field().inv(pa));
      v = R.reduce(S.sub(v, S.mul_poly(q, pivot)));
    };
    auto renumber = [&](FreeVector& v) {
      for (auto& t : v.terms) {
        if (t.comp > pr) --t.comp;
      }
    };
    std::vector<FreeVector> ncols;
    std::vector<int> ndegs;
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (j == pc) continue;
      eliminate(cols[j]);
      if (cols[j].is_zero()) continue;
      renumber(cols[j]);
      ncols.push_back(std::move(cols[j]));
      ndegs.push_back(col_degs[j]);
    }
    cols = std::move(ncols);
    col_degs = std::move(ndegs);
    for (auto& v : to_new) {
      eliminate(v);
      renumber(v);
    }
    degs.erase(degs.begin() + pr);
    orig.erase(orig.begin() + pr);
  }

  auto keep = minimal_generators(R, degs, {}, cols);
  std::sort(keep.begin(), keep.end());
  if (keep.size() != cols.size()) changed = true;
  Matrix rel;
  rel.row_degs = degs;
  for (auto k : keep) {
    rel.cols.push_back(cols[k]);
    rel.col_degs.push_back(col_degs[k]);
  }

  if (!changed) {
    std::lock_guard<std::mutex> lock(m.st_->mu);
    m.st_->flag = MinimalFlag::Minimal;
    return MinimalPresentation{m, identity_matrix(S, m.gen_degs()), identity_matrix(S, m.gen_degs())};
  }

  MinimalPresentation out;
  out.module = FPModule(m.ring(), std::move(rel), MinimalFlag::Minimal);
  out.to_new.row_degs = degs;
  out.to_new.col_degs = m.gen_degs();
  out.to_new.cols = std::move(to_new);
  out.to_old.row_degs = m.gen_degs();
  out.to_old.col_degs = degs;
  for (auto o : orig) out.to_old.cols.push_back(S.embed(S.constant(1), static_cast<std::uint32_t>(o)));
  auto stored = std::make_shared<const MinimalPresentation>(out);
  std::lock_guard<std::mutex> lock(m.st_->mu);
  if (!m.st_->minpres) m.st_->minpres = stored;
  m.st_->flag = MinimalFlag::NonMinimal;
  return *m.st_->minpres;
}

FPModule minimal_presentation(const FPModule& m) { return minimal_presentation_data(m).module; }

std::shared_ptr<const Resolution> resolution_prefix(const FPModule& m, int length) {
  std::shared_ptr<const Resolution> have;
  {
    std::lock_guard<std::mutex> lock(m.st_->mu);
    have = m.st_->resolution;
  }
  if (have && (have->finite || have->length() >= length)) return have;
  LH_TRACE("free_resolution");
  const GradedRing& R = *m.ring();
  auto res = std::make_shared<Resolution>();
  if (have) {
    *res = *have;
  } else {
    FPModule p = minimal_presentation(m);
    res->modules.push_back(p.gen_degs());
    res->differentials.push_back(p.relations());
    res->modules.push_back(p.relations().col_degs);
    res->finite = p.relations().ncols() == 0;
  }
  while (!res->finite && res->length() < length) {
    Matrix syz = syzygy_matrix(R, res->differentials.back());
    auto keep = minimal_generators(R, syz.row_degs, {}, syz.cols);
    std::sort(keep.begin(), keep.end());
    Matrix d = select_columns(syz, keep);
    res->modules.push_back(d.col_degs);
    res->finite = d.ncols() == 0;
    res->differentials.push_back(std::move(d));
  }
  std::lock_guard<std::mutex> lock(m.st_->mu);
  if (!m.st_->resolution || m.st_->resolution->length() < res->length()) m.st_->resolution = res;
  return m.st_->resolution;
}

Resolution free_resolution(const FPModule& m, int length) {
  if (length < 0) throw InputError("resolution length must be non-negative");
  Resolution r = *resolution_prefix(m, length);
  while (r.length() > length && r.length() > 0) {
    r.differentials.pop_back();
    r.modules.pop_back();
    r.finite = false;
  }
  if (!r.differentials.empty() && r.differentials.back().ncols() == 0) r.finite = true;
  return r;
}

FPModule syzygy(const FPModule& m) { return syzygy(m, 1); }

FPModule syzygy(const FPModule& m, int times) {
  if (times < 0) throw InputError("syzygy index must be non-negative");
  if (times == 0) return minimal_presentation(m);
  LH_TRACE("syzygy");
  auto res = resolution_prefix(m, times + 1);
  if (times < res->length()) return FPModule(m.ring(), res->differentials[static_cast<std::size_t>(times)], MinimalFlag::Minimal);
  return FPModule::zero(m.ring());
}

int projective_dimension(const FPModule& m, int bound) {
  if (m.is_zero()) return -1;
  auto res = resolution_prefix(m, bound + 1);
  if (res->finite && res->length() - 1 <= bound) return res->length() - 1;
  return kInfinity;
}

std::vector<int> hom_free_degs(const std::vector<int>& a, const std::vector<int>& c) {
  std::vector<int> out;
  out.reserve(a.size() * c.size());
  for (int ai : a) {
    for (int cj : c) out.push_back(cj - ai);
  }
  return out;
}

std::vector<int> tensor_free_degs(const std::vector<int>& a, const std::vector<int>& c) {
  std::vector<int> out;
  out.reserve(a.size() * c.size());
  for (int ai : a) {
    for (int cj : c) out.push_back(ai + cj);
  }
  return out;
}

Matrix hom_vector_to_matrix(const PolyRing& S, const FreeVector& v, const std::vector<int>& a, const std::vector<int>& c) {
  const std::size_t g = c.size();
  int d = 0;
  if (!v.is_zero()) {
    auto deg = S.degree_of(v, hom_free_degs(a, c));
    if (!deg) throw InputError("inhomogeneous homomorphism");
    d = *deg;
  }
  std::vector<std::vector<Term>> cols(a.size());
  for (const auto& t : v.terms) {
    if (t.comp >= a.size() * g) throw ShapeError("vector does not fit the Hom module");
    cols[t.comp / g].push_back(Term{t.mono, static_cast<std::uint32_t>(t.comp % g), t.coeff});
  }
  Matrix m;
  m.row_degs = c;
  for (std::size_t i = 0; i < a.size(); ++i) {
    m.cols.push_back(normalize_terms(S.field(), std::move(cols[i])));
    m.col_degs.push_back(a[i] + d);
  }
  return m;
}

FreeVector matrix_to_hom_vector(const PolyRing& S, const Matrix& m) {
  std::vector<Term> terms;
  const std::size_t g = m.rows();
  for (std::size_t i = 0; i < m.ncols(); ++i) {
    for (const auto& t : m.cols[i].terms) terms.push_back(Term{t.mono, static_cast<std::uint32_t>(i * g + t.comp), t.coeff});
  }
  return normalize_terms(S.field(), std::move(terms));
}

GradedMap hom_element_to_map(const FPModule& m, const FPModule& n, const FreeVector& v) {
  return make_map(m, n, hom_vector_to_matrix(m.ring()->ambient(), v, m.gen_degs(), n.gen_degs()));
}

HomResult hom_module(const FPModule& m, const FPModule& n) {
  LH_TRACE("hom_module");
  require_same_ring(*m.ring(), *n.ring(), "Hom");
  const GradedRing& R = *m.ring();
  const PolyRing& S = R.ambient();
  const Matrix& A = m.relations();
  const Matrix& B = n.relations();
  const auto& c = n.gen_degs();
  Matrix Z;
  if (A.ncols() == 0) {
    Z = identity_matrix(S, hom_free_degs(m.gen_degs(), c));
  } else {
    Z = kernel_modulo(R, hom_precompose(S, A, c), hom_postcompose(B, A.col_degs));
  }
  HomResult out;
  out.hom = present_subquotient(m.ring(), Z, hom_postcompose(B, m.gen_degs()));
  for (const auto& b : out.hom.module.degree_basis(0)) {
    out.degree0_basis.push_back(hom_element_to_map(m, n, out.hom.represent(b)));
  }
  return out;
}

Subquotient ext_subquotient(int i, const FPModule& m, const FPModule& n) {
  LH_TRACE("ext_module");
  auto [Z, bnd] = ext_data(i, m, n);
  return present_subquotient(m.ring(), Z, bnd);
}

FPModule ext_module(int i, const FPModule& m, const FPModule& n) { return ext_subquotient(i, m, n).module; }

bool ext_vanishes(int i, const FPModule& m, const FPModule& n) {
  LH_TRACE("ext_module");
  auto [Z, bnd] = ext_data(i, m, n);
  return subquotient_vanishes(m.ring(), Z, bnd);
}

Subquotient tor_subquotient(int i, const FPModule& m, const FPModule& n) {
  LH_TRACE("tor_module");
  auto [Z, bnd] = tor_data(i, m, n);
  return present_subquotient(m.ring(), Z, bnd);
}

FPModule tor_module(int i, const FPModule& m, const FPModule& n) { return tor_subquotient(i, m, n).module; }

bool tor_vanishes(int i, const FPModule& m, const FPModule& n) {
  LH_TRACE("tor_module");
  auto [Z, bnd] = tor_data(i, m, n);
  return subquotient_vanishes(m.ring(), Z, bnd);
}

FPModule tensor_module(const FPModule& m, const FPModule& n) {
  LH_TRACE("tensor_module");
  require_same_ring(*m.ring(), *n.ring(), "tensor");
  Matrix rel = hstack(tensor_left(m.relations(), n.gen_degs()), tensor_right(m.gen_degs(), n.relations()));
  return FPModule(m.ring(), std::move(rel));
}

std::pair<int, int> default_window(const FPModule& m) {
  const auto& g = m.gen_degs();
  const auto& r = m.relations().col_degs;
  if (g.empty()) return {0, -1};
  const int lo = *std::min_element(g.begin(), g.end()) - 1;
  const int top = r.empty() ? *std::max_element(g.begin(), g.end()) : *std::max_element(r.begin(), r.end());
  return {lo, top + ring_dimension(m.ring()) + 3};
}

HilbertTable report_table(const FPModule& m) {
  if (m.is_zero()) return HilbertTable{};
  if (m.finite_length()) return m.hilbert_series().finite_table();
  auto [lo, hi] = default_window(m);
  return m.hilbert_table(lo, hi);
}

std::pair<HilbertTable, HilbertTable> comparison_tables(const FPModule& a, const FPModule& b) {
  if (a.finite_length() && b.finite_length()) return {report_table(a), report_table(b)};
  auto wa = default_window(a);
  auto wb = default_window(b);
  if (wa.second < wa.first) wa = wb;
  if (wb.second < wb.first) wb = wa;
  const int lo = std::min(wa.first, wb.first);
  const int hi = std::max(wa.second, wb.second);
  if (hi < lo) return {HilbertTable{}, HilbertTable{}};
  return {a.hilbert_table(lo, hi), b.hilbert_table(lo, hi)};
}

FPModule residue_field(const Ring& ring) { return FPModule::cyclic(maximal_ideal(ring), 0); }

int depth(const FPModule& m) {
  LH_TRACE("depth");
  if (m.is_zero()) return kInfinity;
  FPModule k = residue_field(m.ring());
  const int top = m.dimension();
  for (int i = 0; i < top; ++i) {
    if (!ext_vanishes(i, k, m)) return i;
  }
  return top;
}

Ideal annihilator(const FPModule& m) {
  LH_TRACE("annihilator");
  const GradedRing& R = *m.ring();
  const PolyRing& S = R.ambient();
  const std::size_t r = m.ngens();
  const auto& a = m.gen_degs();
  // r shifted copies of F0; copy i has generator i in degree 0. ann M is the kernel
  // of 1 -> sum_i e_i(copy i) modulo the relations of every copy.
  Matrix block;
  Matrix u;
  u.row_degs.clear();
  u.col_degs = {0};
  FreeVector col;
  for (std::size_t i = 0; i < r; ++i) {
    Matrix copy = shift_degrees(m.relations(), -a[i]);
    block = i == 0 ? copy : direct_sum(S, block, copy);
    col.terms.push_back(Term{S.one(), static_cast<std::uint32_t>(i * r + i), S.field().from_int(1)});
  }
  u.row_degs = block.row_degs;
  u.cols = {col};
  Matrix k = kernel_modulo(R, u, block);
  std::vector<Poly> gens;
  for (const auto& c : k.cols) {
    Poly p = S.component(c, 0);
    if (!p.is_zero()) gens.push_back(p);
  }
  return make_ideal(m.ring(), std::move(gens));
}

FPModule restrict_to_ambient(const FPModule& m) {
  const GradedRing& R = *m.ring();
  const PolyRing& S = R.ambient();
  Ring base = GradedRing::make(S, {});
  auto extra = R.ideal_relations(m.gen_degs());
  Matrix e;
  e.row_degs = m.gen_degs();
  e.col_degs = infer_col_degs(S, extra, m.gen_degs(), 0);
  e.cols = std::move(extra);
  return FPModule(base, hstack(m.relations(), e));
}

FPModule restrict_scalars(const FPModule& m, const Ring& base) {
  const GradedRing& R = *m.ring();
  if (!base->ambient().same_as(R.ambient())) throw InputError("restrict_scalars: different ambient rings");
  for (const auto& g : base->ideal_gens()) {
    if (!R.reduce(g).is_zero()) throw InputError("restrict_scalars: the module's ring is not a quotient of the base");
  }
  const PolyRing& S = R.ambient();
  auto extra = R.ideal_relations(m.gen_degs());
  Matrix e;
  e.row_degs = m.gen_degs();
  e.col_degs = infer_col_degs(S, extra, m.gen_degs(), 0);
  e.cols = std::move(extra);
  return FPModule(base, hstack(m.relations(), e));
}

FPModule base_change(const FPModule& m, const Ring& quotient) {
  const GradedRing& R = *m.ring();
  if (!quotient->ambient().same_as(R.ambient())) throw InputError("base_change: different ambient rings");
  for (const auto& g : R.ideal_gens()) {
    if (!quotient->reduce(g).is_zero()) throw InputError("base_change: target is not a quotient of the module's ring");
  }
  return FPModule(quotient, m.relations());
}

}  // namespace linkhom
