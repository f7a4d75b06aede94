#pragma once

#include <utility>
#include <vector>

#include "linkhom/modules/fpmodule.hpp"
#include "linkhom/trace.hpp"

namespace linkhom {

/// Minimal presentation by unit elimination and graded Nakayama; idempotent.
MinimalPresentation minimal_presentation_data(const FPModule& m);
FPModule minimal_presentation(const FPModule& m);

/// Cached minimal resolution with at least `length` differentials (fewer if it terminates).
std::shared_ptr<const Resolution> resolution_prefix(const FPModule& m, int length);
Resolution free_resolution(const FPModule& m, int length);

/// Omega M: kernel of the projective cover, presented by d_2.
FPModule syzygy(const FPModule& m);
FPModule syzygy(const FPModule& m, int times);
/// pd_R(M) if the resolution ends within `bound` steps, else kInfinity.
int projective_dimension(const FPModule& m, int bound);

/// Free module Hom(F, G) for F, G with basis degrees a, c: basis e_{ij} (f_i -> g_j),
/// index i*|G| + j, degree c_j - a_i.
std::vector<int> hom_free_degs(const std::vector<int>& a, const std::vector<int>& c);
/// Matrix of a homomorphism F -> G from its vector in Hom(F, G).
Matrix hom_vector_to_matrix(const PolyRing& S, const FreeVector& v, const std::vector<int>& a, const std::vector<int>& c);
FreeVector matrix_to_hom_vector(const PolyRing& S, const Matrix& m);
/// F (x) G with basis (i, j) at index i*|G| + j and degree a_i + c_j.
std::vector<int> tensor_free_degs(const std::vector<int>& a, const std::vector<int>& c);

/// phi -> phi * A as a matrix Hom(F0, G) -> Hom(F1, G), for A : F1 -> F0 and G with basis degrees c.
Matrix hom_precompose(const PolyRing& S, const Matrix& A, const std::vector<int>& c);
/// psi -> B * psi as a matrix Hom(F, G1) -> Hom(F, G0), for B : G1 -> G0 and F with basis degrees a.
Matrix hom_postcompose(const Matrix& B, const std::vector<int>& a);
/// A (x) 1 : F1 (x) G -> F0 (x) G.
Matrix tensor_left(const Matrix& A, const std::vector<int>& c);
/// 1 (x) B : F (x) G1 -> F (x) G0.
Matrix tensor_right(const std::vector<int>& a, const Matrix& B);

struct HomResult {
  /// Hom(M, N) as a subquotient of Hom(F0(M), G0(N)).
  Subquotient hom;
  /// k-basis of the degree-0 part, as maps M -> N.
  std::vector<GradedMap> degree0_basis;
};

HomResult hom_module(const FPModule& m, const FPModule& n);
/// The map M -> N represented by an element of Hom(F0(M), G0(N)).
GradedMap hom_element_to_map(const FPModule& m, const FPModule& n, const FreeVector& v);

Subquotient ext_subquotient(int i, const FPModule& m, const FPModule& n);
FPModule ext_module(int i, const FPModule& m, const FPModule& n);
/// Cheaper test that only decides whether Ext^i(M, N) is zero.
bool ext_vanishes(int i, const FPModule& m, const FPModule& n);

Subquotient tor_subquotient(int i, const FPModule& m, const FPModule& n);
FPModule tor_module(int i, const FPModule& m, const FPModule& n);
bool tor_vanishes(int i, const FPModule& m, const FPModule& n);
/// M (x) N = coker [A (x) 1 | 1 (x) B].
FPModule tensor_module(const FPModule& m, const FPModule& n);

/// Default comparison window [min generator degree - 1, max relation degree + dim R + 3].
std::pair<int, int> default_window(const FPModule& m);
/// Full table for finite length modules, otherwise the table on the default window.
HilbertTable report_table(const FPModule& m);
/// Tables of both modules on the union of their default windows.
std::pair<HilbertTable, HilbertTable> comparison_tables(const FPModule& a, const FPModule& b);

/// R/m as a module.
FPModule residue_field(const Ring& ring);
/// min{i : Ext^i(k, M) != 0}; kInfinity for M = 0.
int depth(const FPModule& m);
inline int ring_depth(const Ring& ring) { return depth(FPModule::free(ring, {0})); }

Ideal annihilator(const FPModule& m);

/// The module over the ambient polynomial ring: relations gain I * F0.
FPModule restrict_to_ambient(const FPModule& m);
/// M over R/a viewed as a module over R (R's ideal must be contained in M's).
FPModule restrict_scalars(const FPModule& m, const Ring& base);
/// M (x)_R R/a: the same presentation read over the quotient ring.
FPModule base_change(const FPModule& m, const Ring& quotient);

}  // namespace linkhom
