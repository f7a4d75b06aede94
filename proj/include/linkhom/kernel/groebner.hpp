#pragma once

#include <optional>
#include <span>
#include <vector>

#include "linkhom/kernel/graded_ring.hpp"
#include "linkhom/kernel/matrix.hpp"

namespace linkhom {

/// Input to the homogeneous Buchberger run over the ambient ring.
/// Everything lives in a free module with basis degrees `degs`.
struct BuchbergerInput {
  std::vector<int> degs;
  /// Ideal relations g*e_c; pairs among them are known to reduce to zero.
  std::vector<FreeVector> ideal_relations;
  std::vector<FreeVector> ambient;
  /// Candidate generators. A candidate that is not reducible to zero by
  /// everything of lower degree plus earlier candidates is reported minimal.
  std::vector<FreeVector> tracked;
  /// Stop after this degree (the basis is then only truncated).
  std::optional<int> degree_limit;
};

struct BuchbergerResult {
  /// Reduced basis sorted by descending lead term; monic.
  std::vector<FreeVector> basis;
  /// Indices into `tracked` forming a minimal generating set modulo the rest.
  std::vector<std::size_t> minimal;
};

BuchbergerResult buchberger(const PolyRing& S, const BuchbergerInput& in);

/// Fully reduced remainder of v by a Groebner basis.
FreeVector normal_form(const PolyRing& S, const FreeVector& v, const std::vector<FreeVector>& gb);

/// Reduced Groebner basis (over S) of the submodule gens + I*F of F.
std::vector<FreeVector> groebner_basis(const GradedRing& R, std::span<const int> degs,
                                       const std::vector<FreeVector>& gens);

/// Submodule N of F = sum R(-degs[i]); membership and normal forms modulo N.
class Submodule {
 public:
  Submodule() = default;
  Submodule(Ring ring, std::vector<int> degs, std::vector<FreeVector> gens);

  const std::vector<int>& degs() const { return degs_; }
  const std::vector<FreeVector>& gens() const { return gens_; }
  const std::vector<FreeVector>& gb() const { return gb_; }
  const Ring& ring() const { return ring_; }

  FreeVector reduce(const FreeVector& v) const;
  bool contains(const FreeVector& v) const { return reduce(v).is_zero(); }

 private:
  Ring ring_;
  std::vector<int> degs_;
  std::vector<FreeVector> gens_;
  std::vector<FreeVector> gb_;
};

/// Generators of the kernel of m : G -> F over R (relations among the columns).
/// Rows of the result are indexed by the columns of m. Not necessarily minimal.
Matrix syzygy_matrix(const GradedRing& R, const Matrix& m);
inline Matrix kernel_of_matrix(const GradedRing& R, const Matrix& m) { return syzygy_matrix(R, m); }

/// Kernel of m modulo a submodule of F: vectors a with m*a in `modulo`.
Matrix kernel_modulo(const GradedRing& R, const Matrix& m, const Matrix& modulo);

/// Expresses vectors as R-combinations of the columns of a matrix.
class Lifter {
 public:
  Lifter() = default;
  /// `extra` columns also generate but are not reported in the lift.
  Lifter(Ring ring, const Matrix& gens, const Matrix* extra = nullptr);

  /// Coefficients a with v = sum a_j gens_j (+ something in extra), or nullopt.
  std::optional<FreeVector> lift(const FreeVector& v) const;
  bool contains(const FreeVector& v) const;
  std::size_t ngens() const { return ngens_; }

 private:
  Ring ring_;
  std::size_t rank_ = 0;
  std::size_t ngens_ = 0;
  std::vector<FreeVector> gb_;
};

/// Indices of a minimal subset of `candidates` generating
/// (ambient + candidates + I*F) / (ambient + I*F).
std::vector<std::size_t> minimal_generators(const GradedRing& R, std::span<const int> degs,
                                            const std::vector<FreeVector>& ambient,
                                            const std::vector<FreeVector>& candidates);

}  // namespace linkhom
