#pragma once

// Independent reference computations for tests: plain linear algebra on the
// finite-dimensional graded pieces of free modules over the ambient ring.
// Nothing here goes through the Groebner engine.

#include <map>
#include <random>
#include <vector>

#include "linkhom/kernel/graded_ring.hpp"
#include "linkhom/kernel/matrix.hpp"

namespace oracle {

using namespace linkhom;

inline void monomials_rec(const PolyRing& S, std::size_t var, int remaining, Monomial& cur, std::vector<Monomial>& out) {
  if (S.nvars() == 0) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  int w = S.weights()[var];
  if (var + 1 == S.nvars()) {
    if (remaining % w) return;
    cur.exp[var] = static_cast<std::uint16_t>(remaining / w);
    cur.deg += remaining;
    out.push_back(cur);
    cur.deg -= remaining;
    cur.exp[var] = 0;
    return;
  }
  for (int e = 0; e * w <= remaining; ++e) {
    cur.exp[var] = static_cast<std::uint16_t>(e);
    cur.deg += e * w;
    monomials_rec(S, var + 1, remaining - e * w, cur, out);
    cur.deg -= e * w;
  }
  cur.exp[var] = 0;
}

inline std::vector<Monomial> monomials(const PolyRing& S, int deg) {
  std::vector<Monomial> out;
  if (deg < 0) return out;
  Monomial cur;
  monomials_rec(S, 0, deg, cur, out);
  return out;
}

/// Coordinates of the degree-d piece of F = sum S(-degs[c]).
struct Basis {
  std::map<std::pair<std::uint32_t, std::vector<std::uint16_t>>, std::size_t> index;
  std::size_t size = 0;
};

inline Basis degree_basis(const PolyRing& S, const std::vector<int>& degs, int d) {
  Basis b;
  for (std::size_t c = 0; c < degs.size(); ++c) {
    for (const auto& m : monomials(S, d - degs[c])) {
      b.index[{static_cast<std::uint32_t>(c), std::vector<std::uint16_t>(m.exp.begin(), m.exp.end())}] = b.size++;
    }
  }
  return b;
}

inline std::vector<Scalar> coords(const Basis& b, const FreeVector& v) {
  std::vector<Scalar> row(b.size, Scalar(0));
  for (const auto& t : v.terms) {
    auto it = b.index.find({t.comp, std::vector<std::uint16_t>(t.mono.exp.begin(), t.mono.exp.end())});
    if (it != b.index.end()) row[it->second] = t.coeff;
  }
  return row;
}

/// Rank of a list of row vectors by Gaussian elimination over the field.
inline std::size_t rank(const Field& f, std::vector<std::vector<Scalar>> rows) {
  std::size_t r = 0;
  if (rows.empty()) return 0;
  const std::size_t ncols = rows[0].size();
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && sgn(rows[p][c]) == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    Scalar inv = f.inv(rows[r][c]);
    for (auto& x : rows[r]) x = f.mul(x, inv);
    for (std::size_t q = 0; q < rows.size(); ++q) {
      if (q == r || sgn(rows[q][c]) == 0) continue;
      Scalar k = rows[q][c];
      for (std::size_t j = c; j < ncols; ++j) rows[q][j] = f.sub(rows[q][j], f.mul(k, rows[r][j]));
    }
    ++r;
  }
  return r;
}

/// All m * g of degree d, for g in gens plus I * F.
inline std::vector<FreeVector> degree_span(const GradedRing& R, const std::vector<int>& degs,
                                           const std::vector<FreeVector>& gens, int d) {
  const PolyRing& S = R.ambient();
  std::vector<FreeVector> all = gens;
  auto rel = R.ideal_relations(degs);
  all.insert(all.end(), rel.begin(), rel.end());
  std::vector<FreeVector> out;
  for (const auto& g : all) {
    if (g.is_zero()) continue;
    auto gd = S.degree_of(g, degs);
    if (!gd) continue;
    for (const auto& m : monomials(S, d - *gd)) out.push_back(S.mul_term(g, m, S.field().from_int(1)));
  }
  return out;
}

/// dim_k (F / N)_d with N generated by gens (plus I * F).
inline long long quotient_dim(const GradedRing& R, const std::vector<int>& degs, const std::vector<FreeVector>& gens,
                              int d) {
  Basis b = degree_basis(R.ambient(), degs, d);
  std::vector<std::vector<Scalar>> rows;
  for (const auto& v : degree_span(R, degs, gens, d)) rows.push_back(coords(b, v));
  return static_cast<long long>(b.size) - static_cast<long long>(rank(R.field(), rows));
}

/// v lies in N (plus I * F), decided in its own degree.
inline bool in_submodule(const GradedRing& R, const std::vector<int>& degs, const std::vector<FreeVector>& gens,
                         const FreeVector& v) {
  if (v.is_zero()) return true;
  int d = *R.ambient().degree_of(v, degs);
  Basis b = degree_basis(R.ambient(), degs, d);
  std::vector<std::vector<Scalar>> rows;
  for (const auto& w : degree_span(R, degs, gens, d)) rows.push_back(coords(b, w));
  std::size_t r0 = rank(R.field(), rows);
  rows.push_back(coords(b, v));
  return rank(R.field(), rows) == r0;
}

/// Random homogeneous polynomial of degree d with small integer coefficients.
inline Poly random_poly(const PolyRing& S, int d, std::mt19937_64& rng, int density = 3) {
  Poly p;
  auto mons = monomials(S, d);
  if (mons.empty()) return p;
  std::uniform_int_distribution<int> pick(0, static_cast<int>(mons.size()) - 1);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int k = 0; k < density; ++k) p = S.add(p, S.term_poly(mons[static_cast<std::size_t>(pick(rng))], coef(rng)));
  return p;
}

/// Random homogeneous vector of degree d in F = sum S(-degs[c]).
inline FreeVector random_vector(const PolyRing& S, const std::vector<int>& degs, int d, std::mt19937_64& rng) {
  FreeVector v;
  for (std::size_t c = 0; c < degs.size(); ++c) {
    if (rng() % 3 == 0) continue;
    v = S.add(v, S.embed(random_poly(S, d - degs[c], rng, 2), static_cast<std::uint32_t>(c)));
  }
  return v;
}

}  // namespace oracle

namespace oracle {

/// dim_k Hom(M, N)_d for M = coker A, N = coker B (both over R), by solving the
/// linear conditions degree by degree: phi(e_i) in (G0)_{a_i + d} with
/// phi(A_k) in im B + I*G0, modulo assignments landing in im B + I*G0.
inline long long hom_dim(const GradedRing& R, const Matrix& A, const Matrix& B, int d) {
  const PolyRing& S = R.ambient();
  const Field& f = R.field();
  const auto& a = A.row_degs;
  const auto& c = B.row_degs;
  auto span_rows = [&](int e) {
    Basis b = degree_basis(S, c, e);
    std::vector<std::vector<Scalar>> rows;
    for (const auto& v : degree_span(R, c, B.cols, e)) rows.push_back(coords(b, v));
    return std::make_pair(b, rows);
  };
  // Unknowns: one per (generator i, basis monomial of (G0)_{a_i + d}).
  std::vector<std::pair<std::size_t, FreeVector>> unknowns;
  long long trivial = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto [b, rows] = span_rows(a[i] + d);
    for (const auto& [key, idx] : b.index) {
      Monomial m;
      for (std::size_t v = 0; v < S.nvars(); ++v) {
        m.exp[v] = key.second[v];
        m.deg += key.second[v] * S.weights()[v];
      }
      unknowns.push_back({i, FreeVector{{Term{m, key.first, f.from_int(1)}}}});
    }
    trivial += static_cast<long long>(rank(f, rows));
  }
  // Concatenated target: one block per relation column.
  std::vector<Basis> blocks;
  std::vector<std::size_t> offset;
  std::size_t total = 0;
  std::vector<std::vector<Scalar>> wrows;
  for (std::size_t k = 0; k < A.ncols(); ++k) {
    auto [b, rows] = span_rows(A.col_degs[k] + d);
    offset.push_back(total);
    for (auto& r : rows) {
      std::vector<Scalar> full(0);
      full.resize(total, Scalar(0));
      full.insert(full.end(), r.begin(), r.end());
      wrows.push_back(std::move(full));
    }
    total += b.size;
    blocks.push_back(std::move(b));
  }
  for (auto& r : wrows) r.resize(total, Scalar(0));
  std::vector<std::vector<Scalar>> images;
  for (const auto& [i, u] : unknowns) {
    std::vector<Scalar> row(total, Scalar(0));
    for (std::size_t k = 0; k < A.ncols(); ++k) {
      Poly entry = A.entry(i, k);
      FreeVector img = S.mul_poly(entry, u);
      auto part = coords(blocks[k], img);
      for (std::size_t j = 0; j < part.size(); ++j) row[offset[k] + j] = part[j];
    }
    images.push_back(std::move(row));
  }
  std::size_t rw = rank(f, wrows);
  auto all = wrows;
  all.insert(all.end(), images.begin(), images.end());
  long long map_rank = static_cast<long long>(rank(f, all)) - static_cast<long long>(rw);
  long long solutions = static_cast<long long>(unknowns.size()) - map_rank;
  return solutions - trivial;
}

}  // namespace oracle
