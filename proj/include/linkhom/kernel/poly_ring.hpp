#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace linkhom {

using Scalar = mpq_class;

/// Coefficient field: QQ (characteristic 0) or GF(p) with p prime, p < 2^31.
/// Residues mod p are stored as integers in [0, p) inside an mpq_class so that
/// one coefficient type serves both fields.
class Field {
 public:
  Field() = default;
  explicit Field(std::uint32_t characteristic);

  std::uint32_t characteristic() const { return p_; }
  bool is_rational() const { return p_ == 0; }

  Scalar normalize(const Scalar& a) const;
  Scalar from_int(long v) const { return normalize(Scalar(v)); }
  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar div(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;

  std::string name() const;
  bool operator==(const Field& o) const { return p_ == o.p_; }

 private:
  std::uint32_t p_ = 0;
  mpz_class modulus_;
};

inline constexpr std::size_t kMaxVars = 12;

/// Exponent vector with its weighted degree cached.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> exp{};
  std::int32_t deg = 0;

  bool operator==(const Monomial& o) const { return exp == o.exp; }
  bool is_one() const { return deg == 0; }
};

/// Graded reverse lexicographic comparison: >0 when a > b.
int compare_grevlex(const Monomial& a, const Monomial& b);
bool divides(const Monomial& a, const Monomial& b);

struct Term {
  Monomial mono;
  std::uint32_t comp = 0;
  Scalar coeff;
};

/// Position-over-term order: a lower component index is larger; ties broken by grevlex.
int compare_terms(const Term& a, const Term& b);
inline int compare_positions(const Monomial& am, std::uint32_t ac, const Monomial& bm, std::uint32_t bc) {
  if (ac != bc) return ac < bc ? 1 : -1;
  return compare_grevlex(am, bm);
}

/// Element of a free module over the ambient polynomial ring; terms strictly
/// descending, no zero coefficients. A polynomial is a vector supported in component 0.
struct FreeVector {
  std::vector<Term> terms;

  bool is_zero() const { return terms.empty(); }
  const Term& lead() const { return terms.front(); }
  bool operator==(const FreeVector& o) const;
};

using Poly = FreeVector;

/// The ambient polynomial ring k[x_1..x_n] with positive variable weights.
/// All arithmetic on monomials, polynomials and free vectors goes through here.
class PolyRing {
 public:
  PolyRing() = default;
  PolyRing(Field field, std::vector<std::string> names, std::vector<int> weights);

  const Field& field() const { return field_; }
  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<int>& weights() const { return weights_; }
  int weight_sum() const;
  bool same_as(const PolyRing& o) const;

  Monomial monomial(std::span<const int> exps) const;
  Monomial one() const { return Monomial{}; }
  Monomial variable(std::size_t i) const;
  Monomial mul(const Monomial& a, const Monomial& b) const;
  /// Requires divides(b, a).
  Monomial quotient(const Monomial& a, const Monomial& b) const;
  Monomial lcm(const Monomial& a, const Monomial& b) const;

  Poly constant(const Scalar& c) const;
  Poly constant(long c) const { return constant(field_.from_int(c)); }
  Poly var_poly(std::size_t i) const;
  Poly term_poly(const Monomial& m, const Scalar& c) const;

  FreeVector add(const FreeVector& a, const FreeVector& b) const;
  FreeVector sub(const FreeVector& a, const FreeVector& b) const;
  FreeVector neg(const FreeVector& a) const;
  FreeVector scale(const FreeVector& a, const Scalar& c) const;
  /// c * m * v
  FreeVector mul_term(const FreeVector& v, const Monomial& m, const Scalar& c) const;
  /// p * v, p a polynomial (component 0).
  FreeVector mul_poly(const Poly& p, const FreeVector& v) const;
  /// a - c*m*b (the reduction step).
  FreeVector sub_mul(const FreeVector& a, const Scalar& c, const Monomial& m, const FreeVector& b) const;
  /// Scale so the lead coefficient is 1.
  FreeVector monic(const FreeVector& v) const;

  /// Place polynomial p in component `comp`.
  FreeVector embed(const Poly& p, std::uint32_t comp) const;
  /// Component `comp` of v as a polynomial.
  Poly component(const FreeVector& v, std::uint32_t comp) const;
  /// Re-index components: comp -> comp + offset.
  FreeVector shift_components(const FreeVector& v, std::int64_t offset) const;
  /// Keep only components in [lo, hi) and re-index them from 0.
  FreeVector slice(const FreeVector& v, std::uint32_t lo, std::uint32_t hi) const;
  /// Build a vector from a list of polynomial entries.
  FreeVector from_entries(std::span<const Poly> entries) const;

  /// Degree of v in a free module whose basis vectors have degrees `degs`;
  /// nullopt if v is zero or inhomogeneous.
  std::optional<int> degree_of(const FreeVector& v, std::span<const int> degs) const;
  bool is_homogeneous(const FreeVector& v, std::span<const int> degs) const;
  /// Constant coefficient of a polynomial (0 if none).
  Scalar constant_term(const Poly& p) const;

  std::string to_string(const Poly& p) const;
  std::string to_string(const Monomial& m) const;

 private:
  Field field_;
  std::vector<std::string> names_;
  std::vector<int> weights_;
};

}  // namespace linkhom
