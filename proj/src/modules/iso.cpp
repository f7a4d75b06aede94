#include "linkhom/modules/iso.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <unordered_map>

#include "linkhom/errors.hpp"
#include "linkhom/modules/homological.hpp"

namespace linkhom {

namespace {

constexpr std::uint64_t kFnvOffset = 1469598103934665603ull;
constexpr std::uint64_t kFnvPrime = 1099511628211ull;

void fnv(std::uint64_t& h, const std::string& s) {
  for (unsigned char ch : s) {
    h ^= ch;
    h *= kFnvPrime;
  }
  h ^= 0xff;
  h *= kFnvPrime;
}

std::vector<std::vector<Scalar>> blank(std::size_t rows, std::size_t cols) {
  return std::vector<std::vector<Scalar>>(rows, std::vector<Scalar>(cols, Scalar(0)));
}

std::size_t scalar_rank(const Field& f, std::vector<std::vector<Scalar>> a) {
  std::size_t rank = 0;
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && sgn(a[piv][c]) == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    Scalar inv = f.inv(a[rank][c]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || sgn(a[r][c]) == 0) continue;
      Scalar q = f.mul(a[r][c], inv);
      for (std::size_t k = c; k < cols; ++k) a[r][k] = f.sub(a[r][k], f.mul(q, a[rank][k]));
    }
    ++rank;
  }
  return rank;
}

// The degree-0 maps PM -> PN modulo m: for each generator degree d, the square
// block of constant coefficients between generators of degree d, as a linear
// function of the coordinates in the Hom_0 basis.
struct ScalarBlocks {
  std::vector<std::vector<std::size_t>> rows, cols;
  // parts[d][b] is the block of basis map b in degree slot d.
  std::vector<std::vector<std::vector<std::vector<Scalar>>>> parts;
};

ScalarBlocks scalar_blocks(const FPModule& pm, const FPModule& pn, const std::vector<GradedMap>& basis) {
  ScalarBlocks sb;
  std::map<int, std::size_t> slot;
  for (std::size_t j = 0; j < pn.ngens(); ++j) {
    auto [it, fresh] = slot.emplace(pn.gen_degs()[j], sb.rows.size());
    if (fresh) {
      sb.rows.emplace_back();
      sb.cols.emplace_back();
    }
    sb.rows[it->second].push_back(j);
  }
  for (std::size_t i = 0; i < pm.ngens(); ++i) sb.cols[slot.at(pm.gen_degs()[i])].push_back(i);
  sb.parts.resize(sb.rows.size());
  for (std::size_t d = 0; d < sb.rows.size(); ++d) {
    std::vector<std::size_t> rpos(pn.ngens(), SIZE_MAX);
    for (std::size_t r = 0; r < sb.rows[d].size(); ++r) rpos[sb.rows[d][r]] = r;
    for (const auto& b : basis) {
      auto block = blank(sb.rows[d].size(), sb.cols[d].size());
      for (std::size_t c = 0; c < sb.cols[d].size(); ++c) {
        for (const auto& t : b.matrix.cols[sb.cols[d][c]].terms) {
          if (t.mono.is_one() && rpos[t.comp] != SIZE_MAX) block[rpos[t.comp]][c] = t.coeff;
        }
      }
      sb.parts[d].push_back(std::move(block));
    }
  }
  return sb;
}

bool blocks_invertible(const Field& f, const ScalarBlocks& sb, const std::vector<Scalar>& c) {
  for (std::size_t d = 0; d < sb.rows.size(); ++d) {
    auto block = blank(sb.rows[d].size(), sb.cols[d].size());
    for (std::size_t b = 0; b < c.size(); ++b) {
      if (sgn(c[b]) == 0) continue;
      for (std::size_t r = 0; r < block.size(); ++r) {
        for (std::size_t k = 0; k < block[r].size(); ++k) block[r][k] = f.add(block[r][k], f.mul(c[b], sb.parts[d][b][r][k]));
      }
    }
    if (scalar_rank(f, block) < sb.rows[d].size()) return false;
  }
  return true;
}

// Determinant of a square matrix of linear forms, by expansion over column subsets.
Poly symbolic_det(const PolyRing& T, const std::vector<std::vector<Poly>>& a) {
  const std::size_t n = a.size();
  std::unordered_map<std::uint32_t, Poly> memo;
  std::function<Poly(std::uint32_t)> minor = [&](std::uint32_t used) -> Poly {
    const std::size_t row = static_cast<std::size_t>(__builtin_popcount(used));
    if (row == n) return T.constant(1);
    auto it = memo.find(used);
    if (it != memo.end()) return it->second;
    Poly acc;
    int sign = 1;
    for (std::size_t col = 0; col < n; ++col) {
      if (used & (1u << col)) continue;
      if (!a[row][col].is_zero()) {
        Poly term = T.mul_poly(a[row][col], minor(used | (1u << col)));
        acc = sign > 0 ? T.add(acc, term) : T.sub(acc, term);
      }
      sign = -sign;
    }
    memo.emplace(used, acc);
    return acc;
  };
  return minor(0);
}

struct SearchSpace {
  bool symbolic = false;
  bool identically_zero = false;
  int total_degree = 0;
};

SearchSpace analyse(const Field& f, const ScalarBlocks& sb, std::size_t dim) {
  SearchSpace out;
  if (dim == 0 || dim > 12) return out;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < dim; ++i) names.push_back("c" + std::to_string(i));
  PolyRing T(f, names, std::vector<int>(dim, 1));
  for (std::size_t d = 0; d < sb.rows.size(); ++d) {
    const std::size_t n = sb.rows[d].size();
    if (n > 20) return SearchSpace{};
    std::vector<std::vector<Poly>> a(n, std::vector<Poly>(n));
    for (std::size_t b = 0; b < dim; ++b) {
      Poly var = T.var_poly(b);
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t k = 0; k < n; ++k) {
          if (sgn(sb.parts[d][b][r][k]) != 0) a[r][k] = T.add(a[r][k], T.scale(var, sb.parts[d][b][r][k]));
        }
      }
    }
    if (symbolic_det(T, a).is_zero()) out.identically_zero = true;
    out.total_degree += static_cast<int>(n);
  }
  out.symbolic = true;
  return out;
}

// Calls visit on every point of {0..base-1}^dim until it returns true.
template <class F>
bool enumerate_grid(std::size_t dim, long base, const Field& f, F visit) {
  std::vector<long> digits(dim, 0);
  std::vector<Scalar> c(dim);
  for (;;) {
    for (std::size_t i = 0; i < dim; ++i) c[i] = f.from_int(digits[i]);
    if (visit(c)) return true;
    std::size_t i = 0;
    while (i < dim && ++digits[i] == base) digits[i++] = 0;
    if (i == dim) return false;
  }
}

double grid_size(long base, std::size_t dim) {
  double s = 1;
  for (std::size_t i = 0; i < dim; ++i) s *= static_cast<double>(base);
  return s;
}

GradedMap combine(const std::vector<GradedMap>& basis, const std::vector<Scalar>& c, const FPModule& s, const FPModule& t) {
  GradedMap f = zero_map(s, t);
  for (std::size_t b = 0; b < basis.size(); ++b) {
    if (sgn(c[b]) != 0) f = add_maps(f, scale_map(basis[b], c[b]));
  }
  return f;
}

// Inverse of a bijective f : PM -> PN, verified in both directions.
std::optional<GradedMap> inverse_of(const GradedMap& f) {
  const FPModule& pm = f.source;
  const FPModule& pn = f.target;
  const PolyRing& S = pm.ring()->ambient();
  Lifter lifter(pm.ring(), f.matrix, &pn.relations());
  Matrix g;
  g.row_degs = pm.gen_degs();
  g.col_degs = pn.gen_degs();
  for (std::size_t j = 0; j < pn.ngens(); ++j) {
    auto w = lifter.lift(S.embed(S.constant(1), static_cast<std::uint32_t>(j)));
    if (!w) return std::nullopt;
    g.cols.push_back(std::move(*w));
  }
  GradedMap inv;
  try {
    inv = make_map(pn, pm, std::move(g));
  } catch (const ShapeError&) {
    return std::nullopt;
  }
  if (!maps_equal(compose(inv, f), identity_map(pm))) return std::nullopt;
  if (!maps_equal(compose(f, inv), identity_map(pn))) return std::nullopt;
  return inv;
}

std::optional<int> first_difference(const HilbertSeries& a, const HilbertSeries& b) {
  int lo = INT_MAX, hi = INT_MIN;
  for (const auto* s : {&a, &b}) {
    if (s->numerator.empty()) continue;
    lo = std::min(lo, s->numerator.begin()->first);
    hi = std::max(hi, s->numerator.rbegin()->first);
  }
  if (lo > hi) return std::nullopt;
  for (int d = lo; d <= hi; ++d) {
    if (a.coefficient(d) != b.coefficient(d)) return d;
  }
  return std::nullopt;
}

std::string degree_multiset(const std::vector<int>& v) {
  std::map<int, int> counts;
  for (int d : v) ++counts[d];
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (auto [d, n] : counts) {
    os << (first ? "" : ", ") << d << ':' << n;
    first = false;
  }
  os << '}';
  return os.str();
}

IsoVerdict verdict(IsoStatus s, int twist, std::string reason) {
  IsoVerdict v;
  v.status = s;
  v.twist = twist;
  v.reason = std::move(reason);
  return v;
}

}  // namespace

const char* to_string(IsoStatus s) {
  switch (s) {
    case IsoStatus::Yes:
      return "yes";
    case IsoStatus::No:
      return "no";
    case IsoStatus::Undetermined:
      return "undetermined";
  }
  return "undetermined";
}

std::uint64_t module_hash(const FPModule& m) {
  std::uint64_t h = kFnvOffset;
  FPModule p = minimal_presentation(m);
  const PolyRing& S = m.ring()->ambient();
  fnv(h, m.ring()->to_string());
  fnv(h, to_string(S, p.relations()));
  fnv(h, degree_multiset(p.gen_degs()));
  fnv(h, degree_multiset(p.relations().col_degs));
  for (int d : p.gen_degs()) fnv(h, std::to_string(d));
  return h;
}

IsoVerdict is_isomorphic(const FPModule& m, const FPModule& n, const IsoOptions& opts) {
  LH_TRACE("is_isomorphic");
  require_same_ring(*m.ring(), *n.ring(), "is_isomorphic");
  const Field& field = m.ring()->field();
  const HilbertSeries& hm = m.hilbert_series();
  const HilbertSeries& hn = n.hilbert_series();

  if (hm.is_zero() || hn.is_zero()) {
    if (hm.is_zero() && hn.is_zero()) {
      IsoVerdict v = verdict(IsoStatus::Yes, 0, "both modules are zero");
      v.forward = zero_map(m, n);
      v.backward = zero_map(n, m);
      return v;
    }
    return verdict(IsoStatus::No, 0, "exactly one module is zero");
  }

  int t = 0;
  if (opts.allow_twist) t = hm.numerator.begin()->first - hn.numerator.begin()->first;
  if (m.identity() == n.identity() && t == 0) {
    IsoVerdict v = verdict(IsoStatus::Yes, 0, "identical modules");
    v.forward = identity_map(m);
    v.backward = identity_map(m);
    return v;
  }
  if (hm.shifted(t) != hn) {
    auto d = first_difference(hm.shifted(t), hn);
    std::ostringstream os;
    os << "Hilbert functions differ";
    if (d) os << " in degree " << *d << " (" << hm.shifted(t).coefficient(*d) << " vs " << hn.coefficient(*d) << ")";
    return verdict(IsoStatus::No, t, os.str());
  }

  FPModule mt = twist(m, t);
  MinimalPresentation mpm = minimal_presentation_data(mt);
  MinimalPresentation mpn = minimal_presentation_data(n);
  const FPModule& pm = mpm.module;
  const FPModule& pn = mpn.module;
  auto sorted = [](std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  if (sorted(pm.gen_degs()) != sorted(pn.gen_degs())) {
    return verdict(IsoStatus::No, t,
                   "minimal generator degrees differ: " + degree_multiset(pm.gen_degs()) + " vs " + degree_multiset(pn.gen_degs()));
  }
  if (sorted(pm.relations().col_degs) != sorted(pn.relations().col_degs)) {
    return verdict(IsoStatus::No, t,
                   "minimal relation degrees differ: " + degree_multiset(pm.relations().col_degs) + " vs " +
                       degree_multiset(pn.relations().col_degs));
  }

  HomResult hom = hom_module(pm, pn);
  const auto& basis = hom.degree0_basis;
  const std::size_t dim = basis.size();
  if (dim == 0) return verdict(IsoStatus::No, t, "there is no nonzero degree-0 map");

  ScalarBlocks sb = scalar_blocks(pm, pn, basis);
  SearchSpace space = analyse(field, sb, dim);
  if (space.identically_zero) {
    return verdict(IsoStatus::No, t, "no degree-0 map is surjective modulo the maximal ideal");
  }

  std::optional<GradedMap> f, g;
  auto attempt = [&](const std::vector<Scalar>& c) {
    if (!blocks_invertible(field, sb, c)) return false;
    GradedMap cand = combine(basis, c, pm, pn);
    auto inv = inverse_of(cand);
    if (!inv) return false;
    f = std::move(cand);
    g = std::move(inv);
    return true;
  };

  std::mt19937_64 rng(opts.seed ^ (module_hash(mt) * 0x9e3779b97f4a7c15ull) ^ module_hash(n));
  const bool prime_field = !field.is_rational();
  const long p = static_cast<long>(field.characteristic());
  for (int tries = 0; tries < opts.retries && !f; ++tries) {
    std::vector<Scalar> c(dim);
    for (auto& x : c) {
      if (prime_field) {
        x = field.from_int(std::uniform_int_distribution<long>(0, p - 1)(rng));
      } else {
        x = field.from_int(std::uniform_int_distribution<long>(-9, 9)(rng));
      }
    }
    attempt(c);
  }

  // A nonzero polynomial of total degree D has a non-root on {0..D}^dim whenever D < |k|.
  if (!f && space.symbolic) {
    const long base = space.total_degree + 1;
    if ((!prime_field || base <= p) && grid_size(base, dim) <= 2e5) enumerate_grid(dim, base, field, attempt);
  }
  if (!f && prime_field && static_cast<int>(dim) <= opts.exhaustive_dim && grid_size(p, dim) <= 2e6) {
    if (!enumerate_grid(dim, p, field, attempt)) {
      return verdict(IsoStatus::No, t, "exhaustive search: no degree-0 map over " + field.name() + " is an isomorphism");
    }
  }

  if (!f) {
    if (!ideal_equal(annihilator(mt), annihilator(n))) return verdict(IsoStatus::No, t, "annihilators differ");
    return verdict(IsoStatus::Undetermined, t, "search exhausted without a certificate");
  }

  GradedMap to_pm = make_map(mt, pm, mpm.to_new);
  GradedMap from_pm = make_map(pm, mt, mpm.to_old);
  GradedMap to_pn = make_map(n, pn, mpn.to_new);
  GradedMap from_pn = make_map(pn, n, mpn.to_old);
  GradedMap forward = compose(from_pn, compose(*f, to_pm));
  GradedMap backward = compose(from_pm, compose(*g, to_pn));
  if (!maps_equal(compose(backward, forward), identity_map(mt)) || !maps_equal(compose(forward, backward), identity_map(n))) {
    return verdict(IsoStatus::Undetermined, t, "candidate isomorphism failed verification");
  }
  IsoVerdict v = verdict(IsoStatus::Yes, t, "verified mutually inverse maps");
  v.forward = std::move(forward);
  v.backward = std::move(backward);
  return v;
}

}  // namespace linkhom
