#include "linkhom/kernel/groebner.hpp"

#include <algorithm>

#include "linkhom/errors.hpp"

namespace linkhom {

namespace {

std::uint32_t support_mask(const Monomial& m) {
  std::uint32_t s = 0;
  for (std::size_t v = 0; v < kMaxVars; ++v) {
    if (m.exp[v]) s |= 1u << v;
  }
  return s;
}

struct Elem {
  FreeVector v;
  Monomial lm;
  std::uint32_t comp;
  std::uint32_t mask;
  bool ideal;
};

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  std::uint32_t comp;
  int deg;
  bool skip;
};

class Engine {
 public:
  Engine(const PolyRing& S, std::vector<int> degs) : S_(S), degs_(std::move(degs)), by_comp_(degs_.size()) {}

  const Elem* find_divisor(const Monomial& m, std::uint32_t comp) const {
    std::uint32_t mask = support_mask(m);
    for (std::size_t idx : by_comp_[comp]) {
      const Elem& e = elems_[idx];
      if ((e.mask & ~mask) == 0 && divides(e.lm, m)) return &e;
    }
    return nullptr;
  }

  FreeVector top_reduce(FreeVector v, bool* changed) const {
    while (!v.is_zero()) {
      const Term& lt = v.lead();
      const Elem* e = find_divisor(lt.mono, lt.comp);
      if (!e) break;
      if (changed) *changed = true;
      v = S_.sub_mul(v, lt.coeff, S_.quotient(lt.mono, e->lm), e->v);
    }
    return v;
  }

  FreeVector full_reduce(FreeVector v) const {
    FreeVector rem;
    std::size_t start = 0;
    while (start < v.terms.size()) {
      const Term& lt = v.terms[start];
      const Elem* e = find_divisor(lt.mono, lt.comp);
      if (!e) {
        rem.terms.push_back(lt);
        ++start;
        continue;
      }
      FreeVector rest;
      rest.terms.assign(v.terms.begin() + static_cast<std::ptrdiff_t>(start), v.terms.end());
      v = S_.sub_mul(rest, lt.coeff, S_.quotient(lt.mono, e->lm), e->v);
      start = 0;
    }
    return rem;
  }

  void insert(FreeVector v, bool ideal) {
    v = S_.monic(v);
    const Term lt = v.lead();
    std::size_t t = elems_.size();
    elems_.push_back(Elem{std::move(v), lt.mono, lt.comp, support_mask(lt.mono), ideal});
    const Elem& h = elems_.back();

    std::vector<Pair> cand;
    for (std::size_t g : by_comp_[h.comp]) {
      Monomial l = S_.lcm(elems_[g].lm, h.lm);
      cand.push_back(Pair{g, t, l, h.comp, l.deg + degs_[h.comp], elems_[g].ideal && h.ideal});
    }
    // Criterion M: drop pairs whose lcm is a proper multiple of another new pair's lcm.
    std::vector<char> keep(cand.size(), 1);
    for (std::size_t a = 0; a < cand.size(); ++a) {
      for (std::size_t b = 0; b < cand.size() && keep[a]; ++b) {
        if (a == b) continue;
        if (divides(cand[b].lcm, cand[a].lcm) && !(cand[b].lcm == cand[a].lcm)) keep[a] = 0;
      }
    }
    // Criterion F: one pair per lcm, preferring one known to reduce to zero.
    for (std::size_t a = 0; a < cand.size(); ++a) {
      if (!keep[a]) continue;
      for (std::size_t b = a + 1; b < cand.size(); ++b) {
        if (!keep[b] || !(cand[a].lcm == cand[b].lcm)) continue;
        cand[a].skip = cand[a].skip || cand[b].skip;
        keep[b] = 0;
      }
    }
    // Criterion B on pending pairs.
    std::vector<Pair> kept;
    kept.reserve(pairs_.size());
    for (auto& p : pairs_) {
      if (p.comp == h.comp && divides(h.lm, p.lcm)) {
        Monomial li = S_.lcm(elems_[p.i].lm, h.lm);
        Monomial lj = S_.lcm(elems_[p.j].lm, h.lm);
        if (!(li == p.lcm) && !(lj == p.lcm)) continue;
      }
      kept.push_back(std::move(p));
    }
    pairs_ = std::move(kept);
    for (std::size_t a = 0; a < cand.size(); ++a) {
      if (keep[a] && !cand[a].skip) pairs_.push_back(cand[a]);
    }
    by_comp_[h.comp].push_back(t);
  }

  std::optional<int> min_pair_degree() const {
    std::optional<int> d;
    for (const auto& p : pairs_) {
      if (!d || p.deg < *d) d = p.deg;
    }
    return d;
  }

  // Removes and returns the pending pair of degree d that is smallest in the term order.
  std::optional<Pair> take_pair(int d) {
    std::optional<std::size_t> best;
    for (std::size_t a = 0; a < pairs_.size(); ++a) {
      if (pairs_[a].deg != d) continue;
      if (!best || compare_positions(pairs_[a].lcm, pairs_[a].comp, pairs_[*best].lcm, pairs_[*best].comp) < 0 ||
          (pairs_[a].lcm == pairs_[*best].lcm && pairs_[a].comp == pairs_[*best].comp &&
           std::make_pair(pairs_[a].i, pairs_[a].j) < std::make_pair(pairs_[*best].i, pairs_[*best].j))) {
        best = a;
      }
    }
    if (!best) return std::nullopt;
    Pair p = pairs_[*best];
    pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(*best));
    return p;
  }

  FreeVector spoly(const Pair& p) const {
    const Elem& a = elems_[p.i];
    const Elem& b = elems_[p.j];
    FreeVector s = S_.mul_term(a.v, S_.quotient(p.lcm, a.lm), S_.field().from_int(1));
    return S_.sub_mul(s, S_.field().from_int(1), S_.quotient(p.lcm, b.lm), b.v);
  }

  std::vector<FreeVector> reduced_basis() const {
    std::vector<FreeVector> out;
    out.reserve(elems_.size());
    for (const auto& e : elems_) {
      FreeVector tail;
      tail.terms.assign(e.v.terms.begin() + 1, e.v.terms.end());
      FreeVector r = full_reduce(tail);
      FreeVector v;
      v.terms.reserve(r.terms.size() + 1);
      v.terms.push_back(e.v.terms.front());
      v.terms.insert(v.terms.end(), r.terms.begin(), r.terms.end());
      out.push_back(std::move(v));
    }
    std::sort(out.begin(), out.end(), [](const FreeVector& a, const FreeVector& b) {
      return compare_terms(a.lead(), b.lead()) > 0;
    });
    return out;
  }

 private:
  const PolyRing& S_;
  std::vector<int> degs_;
  std::vector<Elem> elems_;
  std::vector<std::vector<std::size_t>> by_comp_;
  std::vector<Pair> pairs_;
};

struct Item {
  int deg;
  int kind;  // 0 ideal relation, 1 ambient, 2 tracked
  std::size_t index;
  const FreeVector* v;
};

int vector_degree(const PolyRing& S, const FreeVector& v, std::span<const int> degs) {
  for (const auto& t : v.terms) {
    if (t.comp >= degs.size()) throw ShapeError("vector component outside the free module");
  }
  auto d = S.degree_of(v, degs);
  if (!d) throw InputError("inhomogeneous generator");
  return *d;
}

}  // namespace

BuchbergerResult buchberger(const PolyRing& S, const BuchbergerInput& in) {
  std::vector<Item> items;
  auto collect = [&](const std::vector<FreeVector>& vs, int kind) {
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (vs[i].is_zero()) continue;
      items.push_back(Item{vector_degree(S, vs[i], in.degs), kind, i, &vs[i]});
    }
  };
  collect(in.ideal_relations, 0);
  collect(in.ambient, 1);
  collect(in.tracked, 2);
  std::stable_sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
    return a.deg != b.deg ? a.deg < b.deg : a.kind < b.kind;
  });

  Engine eng(S, in.degs);
  BuchbergerResult res;
  std::size_t pos = 0;
  for (;;) {
    std::optional<int> d = eng.min_pair_degree();
    if (pos < items.size() && (!d || items[pos].deg < *d)) d = items[pos].deg;
    if (!d) break;
    if (in.degree_limit && *d > *in.degree_limit) break;
    while (auto p = eng.take_pair(*d)) {
      FreeVector r = eng.top_reduce(eng.spoly(*p), nullptr);
      if (!r.is_zero()) eng.insert(std::move(r), false);
    }
    while (pos < items.size() && items[pos].deg == *d) {
      const Item& it = items[pos++];
      bool changed = false;
      FreeVector r = eng.top_reduce(*it.v, &changed);
      if (r.is_zero()) continue;
      eng.insert(std::move(r), it.kind == 0 && !changed);
      if (it.kind == 2) res.minimal.push_back(it.index);
    }
  }
  res.basis = eng.reduced_basis();
  std::sort(res.minimal.begin(), res.minimal.end());
  return res;
}

FreeVector normal_form(const PolyRing& S, const FreeVector& v, const std::vector<FreeVector>& gb) {
  FreeVector work = v;
  FreeVector rem;
  std::size_t start = 0;
  while (start < work.terms.size()) {
    const Term& lt = work.terms[start];
    const FreeVector* div = nullptr;
    for (const auto& g : gb) {
      const Term& gl = g.lead();
      if (gl.comp == lt.comp && divides(gl.mono, lt.mono)) {
        div = &g;
        break;
      }
    }
    if (!div) {
      rem.terms.push_back(lt);
      ++start;
      continue;
    }
    FreeVector rest;
    rest.terms.assign(work.terms.begin() + static_cast<std::ptrdiff_t>(start), work.terms.end());
    Scalar c = S.field().div(lt.coeff, div->lead().coeff);
    work = S.sub_mul(rest, c, S.quotient(lt.mono, div->lead().mono), *div);
    start = 0;
  }
  return rem;
}

std::vector<FreeVector> groebner_basis(const GradedRing& R, std::span<const int> degs,
                                       const std::vector<FreeVector>& gens) {
  BuchbergerInput in;
  in.degs.assign(degs.begin(), degs.end());
  in.ideal_relations = R.ideal_relations(degs);
  in.ambient = gens;
  return buchberger(R.ambient(), in).basis;
}

Submodule::Submodule(Ring ring, std::vector<int> degs, std::vector<FreeVector> gens)
    : ring_(std::move(ring)), degs_(std::move(degs)), gens_(std::move(gens)) {
  gb_ = groebner_basis(*ring_, degs_, gens_);
}

FreeVector Submodule::reduce(const FreeVector& v) const {
  for (const auto& t : v.terms) {
    if (t.comp >= degs_.size()) throw ShapeError("vector does not live in the ambient free module");
  }
  return normal_form(ring_->ambient(), v, gb_);
}

namespace {

// Augmented module F + S^m: column j of `gens` becomes (gens_j, e_{r+j}).
BuchbergerInput augmented_input(const GradedRing& R, const Matrix& gens, const Matrix* extra) {
  const PolyRing& S = R.ambient();
  check_homogeneous(S, gens);
  const std::size_t r = gens.rows();
  BuchbergerInput in;
  in.degs = gens.row_degs;
  in.degs.insert(in.degs.end(), gens.col_degs.begin(), gens.col_degs.end());
  in.ideal_relations = R.ideal_relations(in.degs);
  for (std::size_t j = 0; j < gens.ncols(); ++j) {
    FreeVector v = gens.cols[j];
    v.terms.push_back(Term{S.one(), static_cast<std::uint32_t>(r + j), S.field().from_int(1)});
    in.ambient.push_back(std::move(v));
  }
  if (extra) {
    if (extra->row_degs != gens.row_degs) throw ShapeError("extra generators live in a different free module");
    check_homogeneous(S, *extra);
    for (const auto& c : extra->cols) in.ambient.push_back(c);
  }
  return in;
}

}  // namespace

Matrix syzygy_matrix(const GradedRing& R, const Matrix& m) {
  const PolyRing& S = R.ambient();
  const std::size_t r = m.rows();
  BuchbergerInput in = augmented_input(R, m, nullptr);
  auto gb = buchberger(S, in).basis;
  Matrix out;
  out.row_degs = m.col_degs;
  for (const auto& g : gb) {
    if (g.lead().comp < r) continue;
    FreeVector syz = S.shift_components(g, -static_cast<std::int64_t>(r));
    if (R.reduce(syz).is_zero()) continue;
    out.col_degs.push_back(*S.degree_of(syz, out.row_degs));
    out.cols.push_back(std::move(syz));
  }
  return out;
}

Matrix kernel_modulo(const GradedRing& R, const Matrix& m, const Matrix& modulo) {
  if (m.row_degs != modulo.row_degs) throw ShapeError("kernel_modulo: target modules differ");
  Matrix both = hstack(m, modulo);
  Matrix syz = syzygy_matrix(R, both);
  const PolyRing& S = R.ambient();
  Matrix out;
  out.row_degs = m.col_degs;
  const auto n = static_cast<std::uint32_t>(m.ncols());
  for (std::size_t j = 0; j < syz.ncols(); ++j) {
    FreeVector v = S.slice(syz.cols[j], 0, n);
    if (v.is_zero()) continue;
    out.cols.push_back(std::move(v));
    out.col_degs.push_back(syz.col_degs[j]);
  }
  return out;
}

Lifter::Lifter(Ring ring, const Matrix& gens, const Matrix* extra)
    : ring_(std::move(ring)), rank_(gens.rows()), ngens_(gens.ncols()) {
  gb_ = buchberger(ring_->ambient(), augmented_input(*ring_, gens, extra)).basis;
}

std::optional<FreeVector> Lifter::lift(const FreeVector& v) const {
  const PolyRing& S = ring_->ambient();
  for (const auto& t : v.terms) {
    if (t.comp >= rank_) throw ShapeError("vector does not live in the target free module");
  }
  FreeVector r = normal_form(S, v, gb_);
  if (!r.is_zero() && r.lead().comp < rank_) return std::nullopt;
  FreeVector coeffs = S.neg(S.shift_components(r, -static_cast<std::int64_t>(rank_)));
  return ring_->reduce(coeffs);
}

bool Lifter::contains(const FreeVector& v) const {
  FreeVector r = normal_form(ring_->ambient(), v, gb_);
  return r.is_zero() || r.lead().comp >= rank_;
}

std::vector<std::size_t> minimal_generators(const GradedRing& R, std::span<const int> degs,
                                            const std::vector<FreeVector>& ambient,
                                            const std::vector<FreeVector>& candidates) {
  BuchbergerInput in;
  in.degs.assign(degs.begin(), degs.end());
  in.ideal_relations = R.ideal_relations(degs);
  in.ambient = ambient;
  in.tracked = candidates;
  std::optional<int> top;
  for (const auto& c : candidates) {
    if (c.is_zero()) continue;
    auto d = R.ambient().degree_of(c, degs);
    if (!d) throw InputError("inhomogeneous generator");
    if (!top || *d > *top) top = *d;
  }
  if (!top) return {};
  in.degree_limit = top;
  return buchberger(R.ambient(), in).minimal;
}

}  // namespace linkhom
