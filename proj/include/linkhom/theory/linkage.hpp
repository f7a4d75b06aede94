#pragma once

#include <string>
#include <vector>

#include "linkhom/kernel/ideal.hpp"
#include "linkhom/modules/fpmodule.hpp"
#include "linkhom/modules/iso.hpp"
#include "linkhom/theory/semidualizing.hpp"

namespace linkhom {

/// Tag for calling a C-relative operation with a module that was not certified semidualizing.
struct AllowUncertified {};

/// Tr M = coker of the dual of the minimal presentation matrix.
FPModule transpose(const FPModule& m);

/// Tr_C M = coker Hom(f, C) for the minimal presentation f of M.
/// Throws PreconditionError unless C is certified.
FPModule transpose_C(const FPModule& m, const SemidualizingModule& c);
FPModule transpose_C(const FPModule& m, const FPModule& c, AllowUncertified);
/// coker Hom(A, C) for the given presentation matrix A (not minimalized).
FPModule transpose_C_of_presentation(const Ring& ring, const Matrix& a, const FPModule& c);

/// lambda M = Omega Tr M.
FPModule lambda(const FPModule& m);

/// lambda_C M = image of Hom(f, C) for the minimal presentation f of M.
FPModule lambda_C(const FPModule& m, const SemidualizingModule& c);
FPModule lambda_C(const FPModule& m, const FPModule& c, AllowUncertified);

/// No free direct summand: the pairing Hom(M, R(-a))_0 x M_a -> k vanishes for every generator degree a.
bool is_stable(const FPModule& m);

enum class LinkageStatus { Linked, NotLinked, Undetermined, Inconsistent };
const char* to_string(LinkageStatus s);

struct LinkageCertificate {
  FPModule module;
  FPModule lambda_module;
  FPModule lambda_squared;
  IsoVerdict iso_witness;
  bool stability_verdict = false;
  bool ext1_tr_vanishes = false;
  LinkageStatus status = LinkageStatus::Undetermined;
  std::string diagnostic;

  bool linked() const { return status == LinkageStatus::Linked; }
};

/// Compares M ~ lambda^2 M (up to twist) with "stable and Ext^1(Tr M, R) = 0".
LinkageCertificate certify_horizontal_linkage(const FPModule& m, const IsoOptions& opts = {});

/// f = (phi_1, ..., phi_n) : M -> sum_j C(delta_j) for the minimal generators phi_j of Hom(M, C).
struct Pushforward {
  GradedMap map;
  FPModule cokernel;
  std::vector<int> twists;
  bool injective = false;
  bool ext1_cokernel_vanishes = false;
};

/// The map and its cokernel, without the precondition check.
Pushforward pushforward_map(const FPModule& m, const FPModule& c);

class PushforwardObstructed : public std::runtime_error {
 public:
  PushforwardObstructed(const std::string& what, HilbertTable table)
      : std::runtime_error(what), table_(std::move(table)) {}
  const HilbertTable& table() const { return table_; }

 private:
  HilbertTable table_;
};

/// Universal pushforward 0 -> M -> sum C(delta_j) -> N -> 0. Requires Ext^1(Tr_C M, C) = 0,
/// otherwise throws PushforwardObstructed with the Hilbert table of that Ext module.
Pushforward universal_pushforward(const FPModule& m, const SemidualizingModule& c);

/// Number of successive injective universal pushforwards, at most n. A result of n is a
/// witness that M is an n-th C-syzygy; it equals the number of leading indices i >= 1
/// with Ext^i(Tr_C M, C) = 0, so a smaller count refutes nothing by itself.
int c_syzygy_steps(const FPModule& m, const FPModule& c, int n);

struct IdealLink {
  Ideal c;
  Ideal I;
  Ideal J;
  bool verified = false;
};

/// J = c : I and verified = (c : J == I). Throws InputError unless c is contained in I.
IdealLink link_ideal(const Ideal& c, const Ideal& I);

/// Stable Hom as Tor_1(Tr M, N).
FPModule stable_hom(const FPModule& m, const FPModule& n);
/// Stable Hom as Hom(M, N) modulo the maps that factor through the projective cover of N.
FPModule stable_hom_direct(const FPModule& m, const FPModule& n);

/// Natural map M -> Tr_C(Tr_C M), with the outer transpose taken on the presentation of
/// Tr_C M induced by the minimal presentation of M.
GradedMap double_transpose_map(const FPModule& m, const FPModule& c);

/// Natural map theta : M -> M^vv = Hom(Hom(M, C), C).
GradedMap bidual_map(const FPModule& m, const FPModule& c);
/// M (x) Hom(C, N) -> Hom(Hom(M, C), N), x (x) psi |-> (phi |-> psi(phi(x))).
/// Source generator i*|Hom(C, N)| + t is e_i (x) psi_t.
GradedMap evaluation_map(const FPModule& m, const FPModule& c, const FPModule& n);

}  // namespace linkhom
