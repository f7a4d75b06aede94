#pragma once

#include <vector>

#include "linkhom/kernel/graded_ring.hpp"

namespace linkhom {

/// A homogeneous map of graded free modules G -> F, stored by columns.
/// row_degs are the basis degrees of F (F = sum R(-row_degs[i])), col_degs the
/// basis degrees of G; column j is the image of the j-th basis vector of G and
/// is homogeneous of degree col_degs[j].
struct Matrix {
  std::vector<int> row_degs;
  std::vector<int> col_degs;
  std::vector<FreeVector> cols;

  std::size_t rows() const { return row_degs.size(); }
  std::size_t ncols() const { return cols.size(); }
  Poly entry(std::size_t i, std::size_t j) const;
  bool is_zero() const;
  bool operator==(const Matrix& o) const = default;
};

/// Sort terms into the module order, merge equal positions and drop zeros.
FreeVector normalize_terms(const Field& f, std::vector<Term> terms);

Matrix zero_matrix(std::vector<int> row_degs, std::vector<int> col_degs);
Matrix identity_matrix(const PolyRing& S, std::vector<int> degs);
/// Build from row-major entries; column degrees must be given explicitly.
Matrix matrix_from_rows(const std::vector<std::vector<Poly>>& rows, std::vector<int> row_degs,
                        std::vector<int> col_degs);

/// Throws ShapeError if a column has a component out of range or a degree
/// different from its declared one.
void check_homogeneous(const PolyRing& S, const Matrix& m);
/// Infer column degrees from the entries; zero columns get `zero_col_deg`.
std::vector<int> infer_col_degs(const PolyRing& S, const std::vector<FreeVector>& cols, std::span<const int> row_degs,
                                int zero_col_deg);

/// Image of a vector of G under m, reduced modulo I.
FreeVector apply(const GradedRing& R, const Matrix& m, const FreeVector& v);
/// A * B (first B then A), reduced modulo I.
Matrix multiply(const GradedRing& R, const Matrix& a, const Matrix& b);
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix direct_sum(const PolyRing& S, const Matrix& a, const Matrix& b);
/// Transposed matrix between the dual free modules (degrees negated).
Matrix transpose(const PolyRing& S, const Matrix& m);
Matrix reduce_entries(const GradedRing& R, const Matrix& m);
Matrix select_columns(const Matrix& m, const std::vector<std::size_t>& idx);
Matrix scale_matrix(const PolyRing& S, const Matrix& m, const Scalar& c);
Matrix add_matrices(const GradedRing& R, const Matrix& a, const Matrix& b);
/// Same map, viewed with all degrees shifted by `t`.
Matrix shift_degrees(const Matrix& m, int t);

std::string to_string(const PolyRing& S, const Matrix& m);

}  // namespace linkhom
