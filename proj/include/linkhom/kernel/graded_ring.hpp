#pragma once

#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "linkhom/kernel/poly_ring.hpp"

namespace linkhom {

/// R = S/I for a homogeneous ideal I of the ambient polynomial ring S.
/// The reduced Groebner basis of I is computed on first use and then frozen.
class GradedRing {
 public:
  static std::shared_ptr<const GradedRing> make(PolyRing ambient, std::vector<Poly> ideal_gens);

  const PolyRing& ambient() const { return ambient_; }
  const Field& field() const { return ambient_.field(); }
  std::size_t nvars() const { return ambient_.nvars(); }
  const std::vector<Poly>& ideal_gens() const { return gens_; }
  /// Reduced Groebner basis of I, sorted by descending lead monomial.
  const std::vector<Poly>& ideal_gb() const;
  bool is_polynomial_ring() const { return ideal_gb().empty(); }
  /// True if I contains a nonzero constant.
  bool is_zero_ring() const;

  /// Same ambient ring and the same ideal.
  bool same_as(const GradedRing& o) const;
  /// Normal form modulo I, applied to every component.
  FreeVector reduce(const FreeVector& v) const;
  /// The generators g*e_c of I*F for F with basis degrees `degs`.
  std::vector<FreeVector> ideal_relations(std::span<const int> degs) const;

  std::string to_string() const;

 private:
  GradedRing(PolyRing ambient, std::vector<Poly> gens) : ambient_(std::move(ambient)), gens_(std::move(gens)) {}

  PolyRing ambient_;
  std::vector<Poly> gens_;
  mutable std::once_flag gb_once_;
  mutable std::vector<Poly> gb_;
};

using Ring = std::shared_ptr<const GradedRing>;

/// Throw InputError unless both rings are the same.
void require_same_ring(const GradedRing& a, const GradedRing& b, const char* what);

}  // namespace linkhom
