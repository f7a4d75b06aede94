#include "linkhom/kernel/poly_ring.hpp"

#include <algorithm>
#include <sstream>

#include "linkhom/errors.hpp"

namespace linkhom {

Field::Field(std::uint32_t characteristic) : p_(characteristic), modulus_(characteristic) {
  if (p_ == 1) throw InputError("GF(1) is not a field");
  if (p_ > 1) {
    if (!mpz_probab_prime_p(modulus_.get_mpz_t(), 30)) {
      throw InputError("GF(" + std::to_string(p_) + "): characteristic must be prime");
    }
  }
}

Scalar Field::normalize(const Scalar& a) const {
  if (p_ == 0) {
    Scalar r = a;
    r.canonicalize();
    return r;
  }
  mpz_class num = a.get_num() % modulus_;
  if (num < 0) num += modulus_;
  mpz_class den = a.get_den() % modulus_;
  if (den < 0) den += modulus_;
  if (den == 0) throw InputError("denominator divisible by the characteristic");
  if (den != 1) {
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), modulus_.get_mpz_t());
    num = (num * inv) % modulus_;
  }
  return Scalar(num);
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (p_ == 0) return a + b;
  mpz_class r = a.get_num() + b.get_num();
  if (r >= modulus_) r -= modulus_;
  return Scalar(r);
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  if (p_ == 0) return a - b;
  mpz_class r = a.get_num() - b.get_num();
  if (r < 0) r += modulus_;
  return Scalar(r);
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (p_ == 0) return a * b;
  mpz_class r = (a.get_num() * b.get_num()) % modulus_;
  return Scalar(r);
}

Scalar Field::inv(const Scalar& a) const {
  if (sgn(a) == 0) throw InputError("division by zero");
  if (p_ == 0) return 1 / a;
  mpz_class r;
  mpz_invert(r.get_mpz_t(), a.get_num().get_mpz_t(), modulus_.get_mpz_t());
  return Scalar(r);
}

Scalar Field::div(const Scalar& a, const Scalar& b) const {
  if (p_ == 0) {
    if (sgn(b) == 0) throw InputError("division by zero");
    return a / b;
  }
  return mul(a, inv(b));
}

Scalar Field::neg(const Scalar& a) const {
  if (p_ == 0) return -a;
  if (sgn(a) == 0) return a;
  return Scalar(modulus_ - a.get_num());
}

std::string Field::name() const { return p_ == 0 ? "QQ" : "GF(" + std::to_string(p_) + ")"; }

int compare_grevlex(const Monomial& a, const Monomial& b) {
  if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
  for (std::size_t v = kMaxVars; v-- > 0;) {
    if (a.exp[v] != b.exp[v]) return a.exp[v] < b.exp[v] ? 1 : -1;
  }
  return 0;
}

bool divides(const Monomial& a, const Monomial& b) {
  if (a.deg > b.deg) return false;
  for (std::size_t v = 0; v < kMaxVars; ++v) {
    if (a.exp[v] > b.exp[v]) return false;
  }
  return true;
}

int compare_terms(const Term& a, const Term& b) { return compare_positions(a.mono, a.comp, b.mono, b.comp); }

bool FreeVector::operator==(const FreeVector& o) const {
  if (terms.size() != o.terms.size()) return false;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].comp != o.terms[i].comp || !(terms[i].mono == o.terms[i].mono) ||
        terms[i].coeff != o.terms[i].coeff) {
      return false;
    }
  }
  return true;
}

PolyRing::PolyRing(Field field, std::vector<std::string> names, std::vector<int> weights)
    : field_(std::move(field)), names_(std::move(names)), weights_(std::move(weights)) {
  if (names_.size() > kMaxVars) {
    throw InputError("at most " + std::to_string(kMaxVars) + " variables are supported");
  }
  if (weights_.empty()) weights_.assign(names_.size(), 1);
  if (weights_.size() != names_.size()) throw InputError("one weight per variable is required");
  for (int w : weights_) {
    if (w <= 0) throw InputError("variable weights must be positive");
  }
}

int PolyRing::weight_sum() const {
  int s = 0;
  for (int w : weights_) s += w;
  return s;
}

bool PolyRing::same_as(const PolyRing& o) const {
  return field_ == o.field_ && names_ == o.names_ && weights_ == o.weights_;
}

Monomial PolyRing::monomial(std::span<const int> exps) const {
  if (exps.size() > nvars()) throw InputError("too many exponents");
  Monomial m;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] < 0 || exps[i] > 60000) throw InputError("exponent out of range");
    m.exp[i] = static_cast<std::uint16_t>(exps[i]);
    m.deg += exps[i] * weights_[i];
  }
  return m;
}

Monomial PolyRing::variable(std::size_t i) const {
  Monomial m;
  m.exp[i] = 1;
  m.deg = weights_[i];
  return m;
}

Monomial PolyRing::mul(const Monomial& a, const Monomial& b) const {
  Monomial m;
  for (std::size_t v = 0; v < kMaxVars; ++v) m.exp[v] = static_cast<std::uint16_t>(a.exp[v] + b.exp[v]);
  m.deg = a.deg + b.deg;
  return m;
}

Monomial PolyRing::quotient(const Monomial& a, const Monomial& b) const {
  Monomial m;
  for (std::size_t v = 0; v < kMaxVars; ++v) m.exp[v] = static_cast<std::uint16_t>(a.exp[v] - b.exp[v]);
  m.deg = a.deg - b.deg;
  return m;
}

Monomial PolyRing::lcm(const Monomial& a, const Monomial& b) const {
  Monomial m;
  for (std::size_t v = 0; v < nvars(); ++v) {
    m.exp[v] = std::max(a.exp[v], b.exp[v]);
    m.deg += m.exp[v] * weights_[v];
  }
  return m;
}

Poly PolyRing::constant(const Scalar& c) const {
  Poly p;
  Scalar n = field_.normalize(c);
  if (sgn(n) != 0) p.terms.push_back(Term{Monomial{}, 0, n});
  return p;
}

Poly PolyRing::var_poly(std::size_t i) const {
  Poly p;
  p.terms.push_back(Term{variable(i), 0, field_.from_int(1)});
  return p;
}

Poly PolyRing::term_poly(const Monomial& m, const Scalar& c) const {
  Poly p;
  Scalar n = field_.normalize(c);
  if (sgn(n) != 0) p.terms.push_back(Term{m, 0, n});
  return p;
}

namespace {

// Merge a and s*b where b's terms are already transformed by the caller's lambda.
template <class Transform>
FreeVector merge_combine(const Field& f, const FreeVector& a, const FreeVector& b, Transform tb) {
  FreeVector r;
  r.terms.reserve(a.terms.size() + b.terms.size());
  std::size_t i = 0, j = 0;
  Term tbj;
  bool have_b = false;
  while (i < a.terms.size() || j < b.terms.size()) {
    if (!have_b && j < b.terms.size()) {
      tbj = tb(b.terms[j]);
      have_b = true;
    }
    if (j >= b.terms.size()) {
      r.terms.push_back(a.terms[i++]);
      continue;
    }
    if (i >= a.terms.size()) {
      r.terms.push_back(std::move(tbj));
      have_b = false;
      ++j;
      continue;
    }
    int c = compare_terms(a.terms[i], tbj);
    if (c > 0) {
      r.terms.push_back(a.terms[i++]);
    } else if (c < 0) {
      r.terms.push_back(std::move(tbj));
      have_b = false;
      ++j;
    } else {
      Scalar s = f.add(a.terms[i].coeff, tbj.coeff);
      if (sgn(s) != 0) r.terms.push_back(Term{a.terms[i].mono, a.terms[i].comp, std::move(s)});
      ++i;
      ++j;
      have_b = false;
    }
  }
  return r;
}

}  // namespace

FreeVector PolyRing::add(const FreeVector& a, const FreeVector& b) const {
  return merge_combine(field_, a, b, [](const Term& t) { return t; });
}

FreeVector PolyRing::sub(const FreeVector& a, const FreeVector& b) const {
  return merge_combine(field_, a, b, [this](const Term& t) { return Term{t.mono, t.comp, field_.neg(t.coeff)}; });
}

FreeVector PolyRing::neg(const FreeVector& a) const {
  FreeVector r = a;
  for (auto& t : r.terms) t.coeff = field_.neg(t.coeff);
  return r;
}

FreeVector PolyRing::scale(const FreeVector& a, const Scalar& c) const {
  Scalar n = field_.normalize(c);
  FreeVector r;
  if (sgn(n) == 0) return r;
  r.terms.reserve(a.terms.size());
  for (const auto& t : a.terms) r.terms.push_back(Term{t.mono, t.comp, field_.mul(t.coeff, n)});
  return r;
}

FreeVector PolyRing::mul_term(const FreeVector& v, const Monomial& m, const Scalar& c) const {
  FreeVector r;
  if (sgn(c) == 0) return r;
  r.terms.reserve(v.terms.size());
  for (const auto& t : v.terms) r.terms.push_back(Term{mul(t.mono, m), t.comp, field_.mul(t.coeff, c)});
  return r;
}

FreeVector PolyRing::mul_poly(const Poly& p, const FreeVector& v) const {
  FreeVector r;
  for (const auto& t : p.terms) r = add(r, mul_term(v, t.mono, t.coeff));
  return r;
}

FreeVector PolyRing::sub_mul(const FreeVector& a, const Scalar& c, const Monomial& m, const FreeVector& b) const {
  Scalar nc = field_.neg(c);
  return merge_combine(field_, a, b,
                       [&](const Term& t) { return Term{mul(t.mono, m), t.comp, field_.mul(t.coeff, nc)}; });
}

FreeVector PolyRing::monic(const FreeVector& v) const {
  if (v.is_zero()) return v;
  Scalar c = v.lead().coeff;
  if (c == 1) return v;
  return scale(v, field_.inv(c));
}

FreeVector PolyRing::embed(const Poly& p, std::uint32_t comp) const {
  FreeVector r = p;
  for (auto& t : r.terms) t.comp = comp;
  return r;
}

Poly PolyRing::component(const FreeVector& v, std::uint32_t comp) const {
  Poly r;
  for (const auto& t : v.terms) {
    if (t.comp == comp) r.terms.push_back(Term{t.mono, 0, t.coeff});
  }
  return r;
}

FreeVector PolyRing::shift_components(const FreeVector& v, std::int64_t offset) const {
  FreeVector r = v;
  for (auto& t : r.terms) {
    std::int64_t c = static_cast<std::int64_t>(t.comp) + offset;
    if (c < 0) throw ShapeError("component index underflow");
    t.comp = static_cast<std::uint32_t>(c);
  }
  return r;
}

FreeVector PolyRing::slice(const FreeVector& v, std::uint32_t lo, std::uint32_t hi) const {
  FreeVector r;
  for (const auto& t : v.terms) {
    if (t.comp >= lo && t.comp < hi) r.terms.push_back(Term{t.mono, t.comp - lo, t.coeff});
  }
  return r;
}

FreeVector PolyRing::from_entries(std::span<const Poly> entries) const {
  FreeVector r;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (const auto& t : entries[i].terms) r.terms.push_back(Term{t.mono, static_cast<std::uint32_t>(i), t.coeff});
  }
  return r;
}

std::optional<int> PolyRing::degree_of(const FreeVector& v, std::span<const int> degs) const {
  if (v.is_zero()) return std::nullopt;
  std::optional<int> d;
  for (const auto& t : v.terms) {
    if (t.comp >= degs.size()) throw ShapeError("vector component outside the free module");
    int td = t.mono.deg + degs[t.comp];
    if (!d) {
      d = td;
    } else if (*d != td) {
      return std::nullopt;
    }
  }
  return d;
}

bool PolyRing::is_homogeneous(const FreeVector& v, std::span<const int> degs) const {
  return v.is_zero() || degree_of(v, degs).has_value();
}

Scalar PolyRing::constant_term(const Poly& p) const {
  for (const auto& t : p.terms) {
    if (t.mono.is_one()) return t.coeff;
  }
  return Scalar(0);
}

std::string PolyRing::to_string(const Monomial& m) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t v = 0; v < nvars(); ++v) {
    if (m.exp[v] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << names_[v];
    if (m.exp[v] > 1) os << '^' << m.exp[v];
  }
  if (first) os << '1';
  return os.str();
}

std::string PolyRing::to_string(const Poly& p) const {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : p.terms) {
    Scalar c = t.coeff;
    bool negative = field_.is_rational() && sgn(c) < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (t.mono.is_one()) {
      os << c.get_str();
    } else {
      if (c != 1) os << c.get_str() << '*';
      os << to_string(t.mono);
    }
  }
  return os.str();
}

}  // namespace linkhom
