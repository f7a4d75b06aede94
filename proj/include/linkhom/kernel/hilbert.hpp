#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "linkhom/kernel/poly_ring.hpp"

namespace linkhom {

/// dim_k of a graded module in each degree of the window [lo, lo + dims.size()).
struct HilbertTable {
  int lo = 0;
  std::vector<long long> dims;

  int hi() const { return lo + static_cast<int>(dims.size()) - 1; }
  long long at(int d) const;
  long long total() const;
  bool is_zero() const;
  /// Same values on the union of both windows (missing entries count as zero).
  bool same_values(const HilbertTable& o) const;
  /// Table of M(t): the degree d entry becomes the degree d - t entry.
  HilbertTable shifted(int t) const;
  /// Table of the graded k-dual: degree d becomes degree -d.
  HilbertTable reversed() const;
  /// Drop leading and trailing zero entries.
  HilbertTable trimmed() const;
  bool operator==(const HilbertTable& o) const { return lo == o.lo && dims == o.dims; }
  std::string to_string() const;
};

HilbertTable make_table(int lo, int hi);

/// Counts standard monomials outside the leading-term module of F/N, where
/// `gb` is a Groebner basis of N in F = sum S(-degs[c]).
HilbertTable hilbert_table(const PolyRing& S, std::span<const int> degs, const std::vector<FreeVector>& gb, int lo,
                           int hi);

/// Exact Hilbert series K(t) / prod(1 - t^w_i) of F/N.
struct HilbertSeries {
  std::map<int, long long> numerator;
  std::vector<int> weights;

  bool is_zero() const { return numerator.empty(); }
  /// Krull dimension of the module (-1 for the zero module).
  int dimension() const;
  bool finite_length() const { return dimension() <= 0; }
  /// Coefficient of t^d.
  long long coefficient(int d) const;
  /// Full table of a finite-length module; throws PreconditionError otherwise.
  HilbertTable finite_table() const;
  HilbertSeries shifted(int t) const;
  bool operator==(const HilbertSeries& o) const { return numerator == o.numerator && weights == o.weights; }
};

HilbertSeries hilbert_series(const PolyRing& S, std::span<const int> degs, const std::vector<FreeVector>& gb);

/// All monomials of weighted degree d.
std::vector<Monomial> monomials_of_degree(const PolyRing& S, int d);

/// Dimension of S/J for a monomial ideal J given by generators, via the
/// largest variable subset containing the support of no generator. -1 if J = (1).
int monomial_krull_dimension(std::span<const Monomial> gens, std::size_t nvars);

}  // namespace linkhom
