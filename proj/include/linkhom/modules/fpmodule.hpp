#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "linkhom/kernel/graded_ring.hpp"
#include "linkhom/kernel/groebner.hpp"
#include "linkhom/kernel/hilbert.hpp"
#include "linkhom/kernel/ideal.hpp"
#include "linkhom/kernel/matrix.hpp"

namespace linkhom {

enum class MinimalFlag { Unknown, Minimal, NonMinimal };

struct MinimalPresentation;
struct Resolution;

/// Finitely presented graded module coker(F1 -> F0) over a graded ring.
/// The relation matrix has row_degs = generator degrees and col_degs =
/// relation degrees, so F0 = sum R(-gen_degs[i]). Values are immutable;
/// derived data (Groebner basis, minimal presentation, resolution) is cached
/// in shared state and filled at most once.
class FPModule {
 public:
  FPModule() = default;
  FPModule(Ring ring, Matrix relations, MinimalFlag flag = MinimalFlag::Unknown);

  static FPModule free(Ring ring, std::vector<int> degs);
  static FPModule zero(Ring ring);
  /// (R/a)(-deg): cyclic module generated in degree `deg`.
  static FPModule cyclic(const Ideal& a, int deg = 0);

  const Ring& ring() const;
  const Matrix& relations() const;
  const std::vector<int>& gen_degs() const { return relations().row_degs; }
  std::size_t ngens() const { return relations().rows(); }
  MinimalFlag minimal_flag() const;
  bool valid() const { return static_cast<bool>(st_); }

  /// Groebner data of im(relations) + I*F0.
  const Submodule& relation_module() const;
  FreeVector reduce(const FreeVector& v) const { return relation_module().reduce(v); }
  bool is_zero_element(const FreeVector& v) const { return reduce(v).is_zero(); }

  const HilbertSeries& hilbert_series() const;
  HilbertTable hilbert_table(int lo, int hi) const;
  bool is_zero() const { return hilbert_series().is_zero(); }
  /// Krull dimension; -1 for the zero module.
  int dimension() const { return hilbert_series().dimension(); }
  bool finite_length() const { return hilbert_series().finite_length(); }
  /// k-basis of M_d as vectors of F0 (standard monomials times generators).
  std::vector<FreeVector> degree_basis(int d) const;

  /// Shared state identity (used for caching keys and cheap equality).
  const void* identity() const { return st_.get(); }

 private:
  friend MinimalPresentation minimal_presentation_data(const FPModule& m);
  friend std::shared_ptr<const Resolution> resolution_prefix(const FPModule& m, int length);
  friend const Lifter& relation_lifter(const FPModule& m);
  struct State;
  std::shared_ptr<State> st_;
};

/// Minimal presentation plus the change of generators in both directions:
/// to_new maps F0(old) -> F0(new), to_old maps F0(new) -> F0(old); both induce
/// mutually inverse isomorphisms of the presented modules.
struct MinimalPresentation {
  FPModule module;
  Matrix to_new;
  Matrix to_old;
};

/// Minimal graded free resolution of the minimal presentation of M:
/// differentials[i] is d_{i+1} : F_{i+1} -> F_i.
struct Resolution {
  std::vector<std::vector<int>> modules;
  std::vector<Matrix> differentials;
  /// True once some F_i is zero (the resolution is complete).
  bool finite = false;
  int length() const { return static_cast<int>(differentials.size()); }
};

/// Lifter through the relation columns of M (cached).
const Lifter& relation_lifter(const FPModule& m);

/// Degree-0 homomorphism given on generators. matrix: F0(source) -> F0(target);
/// witness: F1(source) -> F1(target) with matrix * rel(source) = rel(target) * witness mod I.
struct GradedMap {
  FPModule source;
  FPModule target;
  Matrix matrix;
  Matrix witness;
};

/// Checks well-definedness and computes the witness; throws ShapeError if the
/// matrix does not induce a homomorphism.
GradedMap make_map(const FPModule& source, const FPModule& target, Matrix matrix);
GradedMap identity_map(const FPModule& m);
GradedMap zero_map(const FPModule& source, const FPModule& target);
/// g after f.
GradedMap compose(const GradedMap& g, const GradedMap& f);
GradedMap add_maps(const GradedMap& f, const GradedMap& g);
GradedMap scale_map(const GradedMap& f, const Scalar& c);
bool is_zero_map(const GradedMap& f);
bool maps_equal(const GradedMap& f, const GradedMap& g);
/// Image of an element of the source (vector of F0(source)) in F0(target), reduced.
FreeVector map_element(const GradedMap& f, const FreeVector& v);

/// A subquotient (P + Q) / Q of a free module H = sum R(-degs), re-presented.
/// Generator i of `module` is the class of gens.cols[i].
struct Subquotient {
  FPModule module;
  Matrix gens;
  Matrix modulus;
  std::shared_ptr<const Lifter> lifter;

  /// Coordinates (a vector of F0(module)) of an element h of P + Q; nullopt if h is not in P + Q.
  std::optional<FreeVector> coordinates(const FreeVector& h) const;
  /// Element of H representing a vector of F0(module).
  FreeVector represent(const FreeVector& v) const;
};

/// Present (P + Q + I*H) / (Q + I*H) minimally. P and Q share the row degrees H.
Subquotient present_subquotient(const Ring& ring, const Matrix& P, const Matrix& Q);

FPModule cokernel(const GradedMap& f);
Subquotient image(const GradedMap& f);
Subquotient kernel(const GradedMap& f);

FPModule direct_sum(const FPModule& a, const FPModule& b);
/// M(t): generator degrees decrease by t.
FPModule twist(const FPModule& m, int t);

}  // namespace linkhom
