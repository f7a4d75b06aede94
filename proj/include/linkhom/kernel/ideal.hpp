#pragma once

#include <string>
#include <vector>

#include "linkhom/kernel/graded_ring.hpp"

namespace linkhom {

/// Homogeneous ideal of R = S/I, given by representatives in S.
struct Ideal {
  Ring ring;
  std::vector<Poly> gens;
};

Ideal make_ideal(Ring ring, std::vector<Poly> gens);
Ideal unit_ideal(Ring ring);
Ideal zero_ideal(Ring ring);
Ideal maximal_ideal(Ring ring);

/// Reduced Groebner basis of a + I in S.
std::vector<Poly> ambient_gb(const Ideal& a);
/// Canonical generators over R: the elements of ambient_gb(a) not in I.
std::vector<Poly> canonical_gens(const Ideal& a);

bool ideal_contains(const Ideal& a, const Poly& f);
/// b is contained in a.
bool ideal_contains(const Ideal& a, const Ideal& b);
bool ideal_equal(const Ideal& a, const Ideal& b);
bool is_unit_ideal(const Ideal& a);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
/// a : b = {r : r b in a}.
Ideal colon_ideal(const Ideal& a, const Ideal& b);
Ideal ideal_intersection(const Ideal& a, const Ideal& b);

/// Krull dimension of R/a; -1 for the unit ideal.
int krull_dimension(const Ideal& a);
inline int ring_dimension(const Ring& R) { return krull_dimension(zero_ideal(R)); }

/// The ring R/a.
Ring quotient_ring(const Ideal& a);

std::string to_string(const Ideal& a);

}  // namespace linkhom
