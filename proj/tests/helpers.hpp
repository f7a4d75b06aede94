#pragma once

#include <string>
#include <vector>

#include "linkhom/kernel/graded_ring.hpp"
#include "linkhom/kernel/ideal.hpp"
#include "linkhom/kernel/parse.hpp"
#include "linkhom/modules/fpmodule.hpp"

namespace testing_helpers {

using namespace linkhom;

inline Ring make_ring(std::uint32_t p, std::vector<std::string> vars, std::vector<std::string> rels) {
  PolyRing S(Field(p), vars, {});
  std::vector<Poly> gens;
  for (const auto& r : rels) gens.push_back(parse_poly(S, r));
  return GradedRing::make(S, gens);
}

inline Poly P(const Ring& R, const std::string& s) { return parse_poly(R->ambient(), s); }

inline Ideal ideal(const Ring& R, std::vector<std::string> gens) {
  std::vector<Poly> ps;
  for (const auto& g : gens) ps.push_back(P(R, g));
  return make_ideal(R, ps);
}

/// coker of the matrix given by rows of polynomial strings.
inline FPModule module(const Ring& R, std::vector<std::vector<std::string>> rows, std::vector<int> degs = {}) {
  if (degs.empty()) degs.assign(rows.size(), 0);
  std::vector<std::vector<Poly>> prow;
  std::size_t ncols = rows.empty() ? 0 : rows[0].size();
  for (const auto& r : rows) {
    std::vector<Poly> pr;
    for (const auto& s : r) pr.push_back(P(R, s));
    prow.push_back(std::move(pr));
  }
  std::vector<FreeVector> cols(ncols);
  for (std::size_t j = 0; j < ncols; ++j) {
    for (std::size_t i = 0; i < prow.size(); ++i) {
      cols[j] = R->ambient().add(cols[j], R->ambient().embed(prow[i][j], static_cast<std::uint32_t>(i)));
    }
  }
  auto col_degs = infer_col_degs(R->ambient(), cols, degs, 0);
  return FPModule(R, matrix_from_rows(prow, degs, col_degs));
}

inline FPModule quotient(const Ring& R, std::vector<std::string> gens, int deg = 0) {
  return FPModule::cyclic(ideal(R, gens), deg);
}

}  // namespace testing_helpers
