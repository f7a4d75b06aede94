#include "linkhom/kernel/ideal.hpp"

#include <sstream>

#include "linkhom/errors.hpp"
#include "linkhom/kernel/groebner.hpp"
#include "linkhom/kernel/hilbert.hpp"

namespace linkhom {

namespace {

const int kZeroDeg[1] = {0};

int poly_degree(const PolyRing& S, const Poly& f) {
  auto d = S.degree_of(f, kZeroDeg);
  if (!d) throw InputError("ideal generator " + S.to_string(f) + " is not homogeneous");
  return *d;
}

}  // namespace

Ideal make_ideal(Ring ring, std::vector<Poly> gens) {
  std::vector<Poly> kept;
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    for (const auto& t : g.terms) {
      if (t.comp != 0) throw ShapeError("ideal generators must be polynomials");
    }
    poly_degree(ring->ambient(), g);
    kept.push_back(std::move(g));
  }
  return Ideal{std::move(ring), std::move(kept)};
}

Ideal unit_ideal(Ring ring) {
  Poly one = ring->ambient().constant(1);
  return Ideal{std::move(ring), {one}};
}

Ideal zero_ideal(Ring ring) { return Ideal{std::move(ring), {}}; }

Ideal maximal_ideal(Ring ring) {
  std::vector<Poly> gens;
  for (std::size_t v = 0; v < ring->nvars(); ++v) gens.push_back(ring->ambient().var_poly(v));
  return Ideal{std::move(ring), std::move(gens)};
}

std::vector<Poly> ambient_gb(const Ideal& a) {
  BuchbergerInput in;
  in.degs = {0};
  in.ideal_relations = a.ring->ideal_gb();
  in.ambient = a.gens;
  return buchberger(a.ring->ambient(), in).basis;
}

std::vector<Poly> canonical_gens(const Ideal& a) {
  std::vector<Poly> out;
  for (auto& g : ambient_gb(a)) {
    if (!a.ring->reduce(g).is_zero()) out.push_back(std::move(g));
  }
  return out;
}

bool ideal_contains(const Ideal& a, const Poly& f) {
  return normal_form(a.ring->ambient(), f, ambient_gb(a)).is_zero();
}

bool ideal_contains(const Ideal& a, const Ideal& b) {
  require_same_ring(*a.ring, *b.ring, "ideal containment");
  auto gb = ambient_gb(a);
  for (const auto& g : b.gens) {
    if (!normal_form(a.ring->ambient(), g, gb).is_zero()) return false;
  }
  return true;
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
  require_same_ring(*a.ring, *b.ring, "ideal equality");
  return ambient_gb(a) == ambient_gb(b);
}

bool is_unit_ideal(const Ideal& a) {
  auto gb = ambient_gb(a);
  return !gb.empty() && gb.back().lead().mono.is_one();
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  require_same_ring(*a.ring, *b.ring, "ideal sum");
  std::vector<Poly> g = a.gens;
  g.insert(g.end(), b.gens.begin(), b.gens.end());
  return Ideal{a.ring, std::move(g)};
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  require_same_ring(*a.ring, *b.ring, "ideal product");
  const PolyRing& S = a.ring->ambient();
  std::vector<Poly> g;
  for (const auto& f : a.gens) {
    for (const auto& h : b.gens) {
      Poly p = a.ring->reduce(S.mul_poly(f, h));
      if (!p.is_zero()) g.push_back(std::move(p));
    }
  }
  return Ideal{a.ring, std::move(g)};
}

Ideal colon_ideal(const Ideal& a, const Ideal& b) {
  require_same_ring(*a.ring, *b.ring, "colon ideal");
  const PolyRing& S = a.ring->ambient();
  std::vector<Poly> bg;
  for (const auto& g : b.gens) {
    if (!a.ring->reduce(g).is_zero()) bg.push_back(g);
  }
  if (bg.empty()) return unit_ideal(a.ring);
  // Kernel of R -> (R/a)^m, 1 -> (g_1, ..., g_m).
  std::vector<Poly> rel = a.ring->ideal_gens();
  rel.insert(rel.end(), a.gens.begin(), a.gens.end());
  Ring quotient = GradedRing::make(S, rel);
  Matrix m;
  m.col_degs = {0};
  FreeVector col;
  for (std::size_t i = 0; i < bg.size(); ++i) {
    m.row_degs.push_back(-poly_degree(S, bg[i]));
    col = S.add(col, S.embed(bg[i], static_cast<std::uint32_t>(i)));
  }
  m.cols.push_back(std::move(col));
  Matrix syz = syzygy_matrix(*quotient, m);
  std::vector<Poly> gens = a.gens;
  for (const auto& c : syz.cols) gens.push_back(S.component(c, 0));
  Ideal out = make_ideal(a.ring, std::move(gens));
  out.gens = canonical_gens(out);
  return out;
}

Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
  require_same_ring(*a.ring, *b.ring, "ideal intersection");
  const PolyRing& S = a.ring->ambient();
  Matrix m;
  m.row_degs = {0, 0};
  m.col_degs = {0};
  m.cols.push_back(S.add(S.embed(S.constant(1), 0), S.embed(S.constant(1), 1)));
  Matrix q;
  q.row_degs = {0, 0};
  for (const auto& g : a.gens) {
    q.cols.push_back(S.embed(g, 0));
    q.col_degs.push_back(poly_degree(S, g));
  }
  for (const auto& g : b.gens) {
    q.cols.push_back(S.embed(g, 1));
    q.col_degs.push_back(poly_degree(S, g));
  }
  Matrix k = kernel_modulo(*a.ring, m, q);
  std::vector<Poly> gens;
  for (const auto& c : k.cols) gens.push_back(S.component(c, 0));
  Ideal out = make_ideal(a.ring, std::move(gens));
  out.gens = canonical_gens(out);
  return out;
}

int krull_dimension(const Ideal& a) {
  std::vector<Monomial> leads;
  for (const auto& g : ambient_gb(a)) leads.push_back(g.lead().mono);
  return monomial_krull_dimension(leads, a.ring->nvars());
}

Ring quotient_ring(const Ideal& a) {
  std::vector<Poly> rel = a.ring->ideal_gens();
  rel.insert(rel.end(), a.gens.begin(), a.gens.end());
  return GradedRing::make(a.ring->ambient(), std::move(rel));
}

std::string to_string(const Ideal& a) {
  std::ostringstream os;
  os << '(';
  auto gens = canonical_gens(a);
  if (gens.empty()) os << '0';
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) os << ", ";
    os << a.ring->ambient().to_string(gens[i]);
  }
  os << ')';
  return os.str();
}

}  // namespace linkhom
