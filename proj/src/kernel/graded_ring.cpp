#include "linkhom/kernel/graded_ring.hpp"

#include <sstream>

#include "linkhom/errors.hpp"
#include "linkhom/kernel/groebner.hpp"

namespace linkhom {

std::shared_ptr<const GradedRing> GradedRing::make(PolyRing ambient, std::vector<Poly> ideal_gens) {
  std::vector<Poly> gens;
  const int zero_deg[1] = {0};
  for (auto& g : ideal_gens) {
    if (g.is_zero()) continue;
    for (const auto& t : g.terms) {
      if (t.comp != 0) throw ShapeError("ideal generators must be polynomials");
    }
    if (!ambient.is_homogeneous(g, zero_deg)) {
      throw InputError("defining polynomial " + ambient.to_string(g) + " is not homogeneous");
    }
    gens.push_back(std::move(g));
  }
  return std::shared_ptr<const GradedRing>(new GradedRing(std::move(ambient), std::move(gens)));
}

const std::vector<Poly>& GradedRing::ideal_gb() const {
  std::call_once(gb_once_, [this] {
    BuchbergerInput in;
    in.degs = {0};
    in.ambient = gens_;
    gb_ = buchberger(ambient_, in).basis;
  });
  return gb_;
}

bool GradedRing::is_zero_ring() const {
  const auto& gb = ideal_gb();
  return !gb.empty() && gb.back().lead().mono.is_one();
}

bool GradedRing::same_as(const GradedRing& o) const {
  if (this == &o) return true;
  return ambient_.same_as(o.ambient_) && ideal_gb() == o.ideal_gb();
}

FreeVector GradedRing::reduce(const FreeVector& v) const {
  const auto& gb = ideal_gb();
  if (gb.empty() || v.is_zero()) return v;
  FreeVector work = v;
  FreeVector rem;
  while (!work.is_zero()) {
    const Term& lt = work.lead();
    const Poly* div = nullptr;
    for (const auto& g : gb) {
      if (divides(g.lead().mono, lt.mono)) {
        div = &g;
        break;
      }
    }
    if (div) {
      FreeVector shifted = ambient_.embed(*div, lt.comp);
      work = ambient_.sub_mul(work, lt.coeff, ambient_.quotient(lt.mono, div->lead().mono), shifted);
    } else {
      rem.terms.push_back(lt);
      work.terms.erase(work.terms.begin());
    }
  }
  return rem;
}

std::vector<FreeVector> GradedRing::ideal_relations(std::span<const int> degs) const {
  std::vector<FreeVector> out;
  for (std::size_t c = 0; c < degs.size(); ++c) {
    for (const auto& g : ideal_gb()) out.push_back(ambient_.embed(g, static_cast<std::uint32_t>(c)));
  }
  return out;
}

std::string GradedRing::to_string() const {
  std::ostringstream os;
  os << field().name() << '[';
  for (std::size_t i = 0; i < nvars(); ++i) {
    if (i) os << ',';
    os << ambient_.names()[i];
    if (ambient_.weights()[i] != 1) os << ':' << ambient_.weights()[i];
  }
  os << ']';
  const auto& gb = ideal_gb();
  if (!gb.empty()) {
    os << "/(";
    for (std::size_t i = 0; i < gb.size(); ++i) {
      if (i) os << ", ";
      os << ambient_.to_string(gb[i]);
    }
    os << ')';
  }
  return os.str();
}

void require_same_ring(const GradedRing& a, const GradedRing& b, const char* what) {
  if (!a.same_as(b)) throw InputError(std::string(what) + ": arguments live over different rings");
}

}  // namespace linkhom
