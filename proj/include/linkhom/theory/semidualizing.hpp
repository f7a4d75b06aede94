#pragma once

#include <optional>
#include <string>
#include <vector>

#include "linkhom/modules/fpmodule.hpp"

namespace linkhom {

enum class CertProperty { Semidualizing, GcDimZero, AuslanderClass, BassClass, InjectiveDimFinite };
enum class CertStatus { Certified, Refuted, Undetermined };

const char* to_string(CertProperty p);
const char* to_string(CertStatus s);

/// Evidence for a "for all i > 0" property, checked for 1 <= i <= bound only.
/// Index 0 stands for the non-Ext part of the property (a natural map being an isomorphism).
struct BoundedCertificate {
  CertProperty property = CertProperty::Semidualizing;
  int bound = 0;
  CertStatus status = CertStatus::Undetermined;
  int refuted_index = -1;
  /// Hilbert table of the nonzero module at refuted_index.
  HilbertTable refuted_table;
  std::vector<std::string> evidence;

  bool certified() const { return status == CertStatus::Certified; }
  bool refuted() const { return status == CertStatus::Refuted; }
};

struct SemidualizingModule {
  FPModule module;
  BoundedCertificate certificate;
  /// R -> Hom(C, C), 1 |-> identity; present when the homothety is an isomorphism.
  std::optional<GradedMap> homothety;

  bool certified() const { return certificate.certified(); }
};

/// Default bound dim R + depth R + 2.
int default_bound(const Ring& ring);
/// Bounded certificates below dim R + 1 are reported as undetermined, never certified.
int minimum_certifying_bound(const Ring& ring);

/// Checks that R -> Hom(C, C) is an isomorphism and Ext^i(C, C) = 0 for 1 <= i <= bound
/// (bound < 0 selects the default). A bound below dim R + 1 yields at best Undetermined.
SemidualizingModule is_semidualizing(const FPModule& c, int bound = -1);

/// R itself, certified.
SemidualizingModule free_semidualizing(const Ring& ring);

/// Graded canonical module Ext^c_S(R, S(-sum of weights)), c = codim, read over R.
/// Throws PreconditionError if R is not Cohen-Macaulay.
FPModule canonical_module(const Ring& ring);

bool is_cohen_macaulay_ring(const Ring& ring);

}  // namespace linkhom
