#pragma once

#include <optional>
#include <string>
#include <vector>

#include "linkhom/modules/fpmodule.hpp"
#include "linkhom/modules/iso.hpp"
#include "linkhom/theory/semidualizing.hpp"

namespace linkhom {

/// First index in a scanned range where a module is nonzero; nullopt means
/// "vanishes for every index up to `bound`" (reported as +infinity).
struct ScanResult {
  std::optional<int> index;
  int bound = 0;

  bool infinite() const { return !index.has_value(); }
  std::string to_string() const;
};

/// Bounded G_C-dimension-zero test: Ext^i(X, C) = 0 = Ext^i(Tr_C X, C) for 1 <= i <= bound.
BoundedCertificate gc_dimension_zero(const FPModule& x, const SemidualizingModule& c, int bound = -1);

enum class GcDimStatus { Finite, Infinite, Undetermined, ZeroModule };
const char* to_string(GcDimStatus s);

struct GcDimension {
  GcDimStatus status = GcDimStatus::Undetermined;
  /// Smallest n with Omega^n M of G_C-dimension zero (bounded certificate).
  int value = -1;
  int bound = 0;
  /// sup{i <= bound : Ext^i(M, C) != 0}, -1 if none.
  int sup_ext = -1;
  /// depth R - depth M.
  int depth_formula = 0;
  bool consistent = true;
  std::string diagnostic;

  bool finite() const { return status == GcDimStatus::Finite; }
};

/// Scans n = 0 .. depth R; a refuted certificate at n = depth R proves infinite dimension.
GcDimension gc_dimension(const FPModule& m, const SemidualizingModule& c, int bound = -1);

/// min{i : Ext^i(M, R) != 0}; PreconditionError for M = 0.
int grade(const FPModule& m);
/// inf{i > 0 : Ext^i(M, C) != 0}, scanned up to bound.
ScanResult reduced_grade(const FPModule& m, const FPModule& c, int bound = -1);
/// inf{i > 0 : Ext^i_{I_C}(M, R) != 0}, scanned up to bound.
ScanResult relative_reduced_grade(const FPModule& m, const SemidualizingModule& c, int bound = -1);

/// mu : M -> Hom(C, M (x) C) is an isomorphism and Tor_i(M, C) = 0 = Ext^i(C, M (x) C) for 1 <= i <= bound.
BoundedCertificate in_auslander_class(const FPModule& m, const SemidualizingModule& c, int bound = -1);
/// C (x) Hom(C, M) -> M is an isomorphism and Ext^i(C, M) = 0 = Tor_i(Hom(C, M), C) for 1 <= i <= bound.
BoundedCertificate in_bass_class(const FPModule& m, const SemidualizingModule& c, int bound = -1);

/// The natural map M -> Hom(C, M (x) C).
GradedMap auslander_map(const FPModule& m, const FPModule& c);
/// The evaluation C (x) Hom(C, M) -> M.
GradedMap bass_map(const FPModule& m, const FPModule& c);

/// Ext^i_{I_C}(M, N), computed as Ext^i(M (x) C, N (x) C). This is a definition by theorem:
/// there is no independent route through proper C-injective coresolutions.
FPModule relative_ext(int i, const FPModule& m, const FPModule& n, const SemidualizingModule& c);
inline constexpr const char* kRelativeExtLabel = "definition-by-theorem";

struct SerreVerdict {
  int n = 0;
  /// Ext^i(Tr_C M, C) = 0 for 1 <= i <= n.
  bool criterion = false;
  int failing_index = -1;
  /// depth M >= min(n, depth R).
  bool depth_at_maximal = false;
  /// Exact decision of S_n over a Cohen-Macaulay ring: for 1 <= t <= d,
  /// Ext^t(M, omega) is zero or has dimension <= d - t - n.
  std::optional<bool> exact;
};

SerreVerdict serre_condition(const FPModule& m, const SemidualizingModule& c, int n);
/// The exact S_n decision over a Cohen-Macaulay ring (PreconditionError otherwise).
bool satisfies_serre_exact(const FPModule& m, int n);
bool is_maximal_cohen_macaulay(const FPModule& m);
/// H^i_m(M) is of finite length for all 0 <= i < dim M (and dim M = dim R or M = 0 is not required).
bool is_generalized_cohen_macaulay(const FPModule& m);

/// Hilbert table of H^i_m(M) on [lo, hi], the degree-reversed table of Ext^{d-i}(M, omega).
HilbertTable local_cohomology_hilbert(const FPModule& m, int i, int lo, int hi);
/// The module Ext^{d-i}(M, omega) whose graded dual is H^i_m(M).
FPModule local_cohomology_dual(const FPModule& m, int i);
/// H^0_m(M) = union of (0 :_M m^t), computed directly.
FPModule torsion_submodule(const FPModule& m);

struct GcPerfectData {
  Ring quotient;
  int grade = 0;
  GcDimension gc_dim;
  bool perfect = false;
  /// K = Ext^grade(R/a, C) over R/a.
  FPModule K;
  SemidualizingModule K_certificate;
  /// Cyclic K: K ~ R/a up to twist is verified.
  bool gorenstein = false;
  std::optional<IsoVerdict> gorenstein_iso;
  bool certified = false;
  std::string report;
};

GcPerfectData gc_perfect_ideal_data(const Ideal& a, const SemidualizingModule& c, int bound = -1);

struct GolodRow {
  int i = 0;
  HilbertTable left;
  HilbertTable right;
  bool tables_agree = false;
  IsoStatus iso = IsoStatus::Undetermined;
};

struct GolodReport {
  std::vector<GolodRow> rows;
  /// gcdim_R(M) = grade(a) + G_K-dim_{R/a}(M) when both are finite.
  std::optional<bool> shift_formula;
  bool pass = false;
};

/// Compares Ext^i_{R/a}(M, K) with Ext^{m+i}_R(M, C) for 0 <= i <= max_i.
GolodReport golod_functor_check(const GcPerfectData& data, const SemidualizingModule& c, const FPModule& m_over_quotient,
                                int max_i, const IsoOptions& opts = {});

}  // namespace linkhom
