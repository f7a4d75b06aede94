#pragma once

#include <random>

#include "helpers.hpp"
#include "oracle.hpp"

namespace testing_helpers {

struct Rings {
  Ring R1 = make_ring(0, {"x"}, {"x^2"});
  Ring S2 = make_ring(0, {"x", "y"}, {});
  Ring R2 = make_ring(0, {"x", "y"}, {"x*y"});
  Ring R3 = make_ring(0, {"x", "y"}, {"x^2", "x*y", "y^2"});
};

// Random small module over a random catalog ring: a few generators in degrees 0..1
// and a few homogeneous relations of degree one or two above.
inline FPModule random_module_over(const Ring& R, std::mt19937_64& rng) {
  const PolyRing& S = R->ambient();
  std::vector<int> degs;
  const std::size_t ngens = 1 + rng() % 2;
  for (std::size_t i = 0; i < ngens; ++i) degs.push_back(static_cast<int>(rng() % 2));
  std::vector<FreeVector> cols;
  std::vector<int> col_degs;
  const std::size_t nrel = rng() % 4;
  for (std::size_t j = 0; j < nrel; ++j) {
    int d = 1 + static_cast<int>(rng() % 2) + static_cast<int>(rng() % 2);
    FreeVector v = oracle::random_vector(S, degs, d, rng);
    cols.push_back(v);
    col_degs.push_back(d);
  }
  Matrix m;
  m.row_degs = degs;
  m.col_degs = col_degs;
  m.cols = cols;
  return FPModule(R, m);
}

inline const Rings& catalog_rings() {
  static const Rings rings;
  return rings;
}

inline FPModule random_module(std::mt19937_64& rng) {
  const Rings& r = catalog_rings();
  const Ring choices[] = {r.R1, r.S2, r.R2, r.R3};
  return random_module_over(choices[rng() % 4], rng);
}

// Random homogeneous ideal with one or two generators of degree 1 or 2.
inline Ideal random_ideal(const Ring& R, std::mt19937_64& rng) {
  const PolyRing& S = R->ambient();
  std::vector<Poly> gens;
  const std::size_t n = 1 + rng() % 2;
  for (std::size_t j = 0; j < n; ++j) {
    FreeVector v = oracle::random_vector(S, std::vector<int>{0}, 1 + static_cast<int>(rng() % 2), rng);
    if (!v.is_zero()) gens.push_back(v);
  }
  return make_ideal(R, gens);
}

}  // namespace testing_helpers
