#include "linkhom/kernel/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "linkhom/errors.hpp"

namespace linkhom {

Poly Matrix::entry(std::size_t i, std::size_t j) const {
  Poly r;
  for (const auto& t : cols[j].terms) {
    if (t.comp == i) r.terms.push_back(Term{t.mono, 0, t.coeff});
  }
  return r;
}

bool Matrix::is_zero() const {
  for (const auto& c : cols) {
    if (!c.is_zero()) return false;
  }
  return true;
}

Matrix zero_matrix(std::vector<int> row_degs, std::vector<int> col_degs) {
  Matrix m;
  m.row_degs = std::move(row_degs);
  m.cols.assign(col_degs.size(), FreeVector{});
  m.col_degs = std::move(col_degs);
  return m;
}

Matrix identity_matrix(const PolyRing& S, std::vector<int> degs) {
  Matrix m;
  m.row_degs = degs;
  m.col_degs = degs;
  for (std::size_t i = 0; i < degs.size(); ++i) m.cols.push_back(S.embed(S.constant(1), static_cast<std::uint32_t>(i)));
  return m;
}

Matrix matrix_from_rows(const std::vector<std::vector<Poly>>& rows, std::vector<int> row_degs,
                        std::vector<int> col_degs) {
  if (rows.size() != row_degs.size()) throw ShapeError("row count does not match the generator degrees");
  Matrix m;
  m.row_degs = std::move(row_degs);
  m.col_degs = std::move(col_degs);
  m.cols.assign(m.col_degs.size(), FreeVector{});
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.col_degs.size()) throw ShapeError("ragged matrix rows");
  }
  for (std::size_t j = 0; j < m.col_degs.size(); ++j) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (const auto& t : rows[i][j].terms) m.cols[j].terms.push_back(Term{t.mono, static_cast<std::uint32_t>(i), t.coeff});
    }
  }
  return m;
}

void check_homogeneous(const PolyRing& S, const Matrix& m) {
  if (m.cols.size() != m.col_degs.size()) throw ShapeError("column count does not match column degrees");
  for (std::size_t j = 0; j < m.cols.size(); ++j) {
    for (const auto& t : m.cols[j].terms) {
      if (t.comp >= m.rows()) throw ShapeError("matrix entry outside the target free module");
      if (t.mono.deg + m.row_degs[t.comp] != m.col_degs[j]) {
        throw ShapeError("column " + std::to_string(j) + " is not homogeneous of degree " + std::to_string(m.col_degs[j]));
      }
    }
  }
  (void)S;
}

std::vector<int> infer_col_degs(const PolyRing& S, const std::vector<FreeVector>& cols, std::span<const int> row_degs,
                                int zero_col_deg) {
  std::vector<int> out;
  for (const auto& c : cols) {
    if (c.is_zero()) {
      out.push_back(zero_col_deg);
      continue;
    }
    auto d = S.degree_of(c, row_degs);
    if (!d) throw InputError("matrix column is not homogeneous");
    out.push_back(*d);
  }
  return out;
}

FreeVector apply(const GradedRing& R, const Matrix& m, const FreeVector& v) {
  const PolyRing& S = R.ambient();
  FreeVector out;
  for (const auto& t : v.terms) {
    if (t.comp >= m.ncols()) throw ShapeError("vector does not fit the matrix source");
    out = S.add(out, S.mul_term(m.cols[t.comp], t.mono, t.coeff));
  }
  return R.reduce(out);
}

Matrix multiply(const GradedRing& R, const Matrix& a, const Matrix& b) {
  if (a.col_degs != b.row_degs) throw ShapeError("matrix product: degrees do not match");
  Matrix m;
  m.row_degs = a.row_degs;
  m.col_degs = b.col_degs;
  for (const auto& c : b.cols) m.cols.push_back(apply(R, a, c));
  return m;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.row_degs != b.row_degs) throw ShapeError("hstack: row degrees differ");
  Matrix m = a;
  m.col_degs.insert(m.col_degs.end(), b.col_degs.begin(), b.col_degs.end());
  m.cols.insert(m.cols.end(), b.cols.begin(), b.cols.end());
  return m;
}

Matrix direct_sum(const PolyRing& S, const Matrix& a, const Matrix& b) {
  Matrix m;
  m.row_degs = a.row_degs;
  m.row_degs.insert(m.row_degs.end(), b.row_degs.begin(), b.row_degs.end());
  m.col_degs = a.col_degs;
  m.col_degs.insert(m.col_degs.end(), b.col_degs.begin(), b.col_degs.end());
  m.cols = a.cols;
  for (const auto& c : b.cols) m.cols.push_back(S.shift_components(c, static_cast<std::int64_t>(a.rows())));
  return m;
}

Matrix transpose(const PolyRing& S, const Matrix& m) {
  Matrix t;
  for (int d : m.col_degs) t.row_degs.push_back(-d);
  for (int d : m.row_degs) t.col_degs.push_back(-d);
  std::vector<std::vector<Term>> cols(m.rows());
  for (std::size_t j = 0; j < m.ncols(); ++j) {
    for (const auto& term : m.cols[j].terms) cols[term.comp].push_back(Term{term.mono, static_cast<std::uint32_t>(j), term.coeff});
  }
  for (auto& c : cols) {
    FreeVector v;
    // Terms arrive in ascending component order with each component's terms descending.
    v.terms = std::move(c);
    t.cols.push_back(std::move(v));
  }
  (void)S;
  return t;
}

Matrix reduce_entries(const GradedRing& R, const Matrix& m) {
  Matrix r = m;
  for (auto& c : r.cols) c = R.reduce(c);
  return r;
}

Matrix select_columns(const Matrix& m, const std::vector<std::size_t>& idx) {
  Matrix r;
  r.row_degs = m.row_degs;
  for (auto i : idx) {
    r.cols.push_back(m.cols.at(i));
    r.col_degs.push_back(m.col_degs.at(i));
  }
  return r;
}

Matrix scale_matrix(const PolyRing& S, const Matrix& m, const Scalar& c) {
  Matrix r = m;
  for (auto& col : r.cols) col = S.scale(col, c);
  return r;
}

Matrix add_matrices(const GradedRing& R, const Matrix& a, const Matrix& b) {
  if (a.row_degs != b.row_degs || a.col_degs != b.col_degs) throw ShapeError("matrix sum: shapes differ");
  Matrix r = a;
  for (std::size_t j = 0; j < r.ncols(); ++j) r.cols[j] = R.reduce(R.ambient().add(a.cols[j], b.cols[j]));
  return r;
}

Matrix shift_degrees(const Matrix& m, int t) {
  Matrix r = m;
  for (auto& d : r.row_degs) d += t;
  for (auto& d : r.col_degs) d += t;
  return r;
}

std::string to_string(const PolyRing& S, const Matrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << ", ";
    os << '[';
    for (std::size_t j = 0; j < m.ncols(); ++j) {
      if (j) os << ", ";
      os << S.to_string(m.entry(i, j));
    }
    os << ']';
  }
  os << ']';
  return os.str();
}


FreeVector normalize_terms(const Field& f, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return compare_terms(a, b) > 0; });
  FreeVector v;
  for (auto& t : terms) {
    if (!v.terms.empty() && v.terms.back().comp == t.comp && v.terms.back().mono == t.mono) {
      v.terms.back().coeff = f.add(v.terms.back().coeff, t.coeff);
      if (sgn(v.terms.back().coeff) == 0) v.terms.pop_back();
    } else if (sgn(t.coeff) != 0) {
      v.terms.push_back(std::move(t));
    }
  }
  return v;
}

}  // namespace linkhom
