#include "linkhom/kernel/hilbert.hpp"

#include <algorithm>
#include <sstream>

#include "linkhom/errors.hpp"

namespace linkhom {

long long HilbertTable::at(int d) const {
  if (d < lo || d > hi()) return 0;
  return dims[static_cast<std::size_t>(d - lo)];
}

long long HilbertTable::total() const {
  long long s = 0;
  for (auto v : dims) s += v;
  return s;
}

bool HilbertTable::is_zero() const {
  return std::all_of(dims.begin(), dims.end(), [](long long v) { return v == 0; });
}

bool HilbertTable::same_values(const HilbertTable& o) const {
  int a = std::min(lo, o.lo);
  int b = std::max(hi(), o.hi());
  for (int d = a; d <= b; ++d) {
    if (at(d) != o.at(d)) return false;
  }
  return true;
}

HilbertTable HilbertTable::shifted(int t) const {
  HilbertTable r = *this;
  r.lo -= t;
  return r;
}

HilbertTable HilbertTable::reversed() const {
  HilbertTable r;
  r.lo = dims.empty() ? -lo : -hi();
  r.dims.assign(dims.rbegin(), dims.rend());
  return r;
}

HilbertTable HilbertTable::trimmed() const {
  HilbertTable r;
  std::size_t a = 0, b = dims.size();
  while (a < b && dims[a] == 0) ++a;
  while (b > a && dims[b - 1] == 0) --b;
  r.lo = a < b ? lo + static_cast<int>(a) : 0;
  r.dims.assign(dims.begin() + static_cast<std::ptrdiff_t>(a), dims.begin() + static_cast<std::ptrdiff_t>(b));
  return r;
}

std::string HilbertTable::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i) os << ", ";
    os << lo + static_cast<int>(i) << ':' << dims[i];
  }
  os << '}';
  return os.str();
}

HilbertTable make_table(int lo, int hi) {
  HilbertTable t;
  t.lo = lo;
  if (hi >= lo) t.dims.assign(static_cast<std::size_t>(hi - lo + 1), 0);
  return t;
}

namespace {

void count_standard(const PolyRing& S, const std::vector<Monomial>& leads, Monomial& cur, std::size_t var, int remaining,
                    long long& count) {
  const auto& w = S.weights();
  if (var + 1 == S.nvars() || S.nvars() == 0) {
    if (S.nvars() == 0) {
      if (remaining != 0) return;
    } else {
      if (remaining % w[var] != 0) return;
      cur.exp[var] = static_cast<std::uint16_t>(remaining / w[var]);
      cur.deg += remaining;
    }
    bool standard = true;
    for (const auto& l : leads) {
      if (divides(l, cur)) {
        standard = false;
        break;
      }
    }
    if (standard) ++count;
    if (S.nvars() != 0) {
      cur.deg -= remaining;
      cur.exp[var] = 0;
    }
    return;
  }
  for (int e = 0; e * w[var] <= remaining; ++e) {
    cur.exp[var] = static_cast<std::uint16_t>(e);
    cur.deg += e * w[var];
    count_standard(S, leads, cur, var + 1, remaining - e * w[var], count);
    cur.deg -= e * w[var];
  }
  cur.exp[var] = 0;
}

using Laurent = std::map<int, long long>;

void add_into(Laurent& a, const Laurent& b, long long sign, int shift) {
  for (const auto& [k, v] : b) {
    long long& slot = a[k + shift];
    slot += sign * v;
    if (slot == 0) a.erase(k + shift);
  }
}

Laurent mul(const Laurent& a, const Laurent& b) {
  Laurent r;
  for (const auto& [ka, va] : a) {
    for (const auto& [kb, vb] : b) {
      long long& slot = r[ka + kb];
      slot += va * vb;
    }
  }
  for (auto it = r.begin(); it != r.end();) it = it->second == 0 ? r.erase(it) : std::next(it);
  return r;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return compare_grevlex(a, b) < 0; });
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& o : out) {
      if (divides(o, g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out.push_back(g);
  }
  return out;
}

// Numerator of the Hilbert series of S/J by pivoting on a variable power.
Laurent numerator(const PolyRing& S, std::vector<Monomial> gens) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return Laurent{{0, 1}};
  for (const auto& g : gens) {
    if (g.is_one()) return Laurent{};
  }
  const std::size_t n = S.nvars();
  std::vector<int> occurrences(n, 0);
  bool coprime = true;
  std::vector<char> seen(n, 0);
  for (const auto& g : gens) {
    for (std::size_t v = 0; v < n; ++v) {
      if (!g.exp[v]) continue;
      ++occurrences[v];
      if (seen[v]) coprime = false;
      seen[v] = 1;
    }
  }
  if (coprime) {
    Laurent r{{0, 1}};
    for (const auto& g : gens) r = mul(r, Laurent{{0, 1}, {g.deg, -1}});
    return r;
  }
  std::size_t pv = 0;
  for (std::size_t v = 1; v < n; ++v) {
    if (occurrences[v] > occurrences[pv]) pv = v;
  }
  int e = 0;
  for (const auto& g : gens) {
    if (g.exp[pv] && (e == 0 || g.exp[pv] < e)) e = g.exp[pv];
  }
  Monomial p;
  p.exp[pv] = static_cast<std::uint16_t>(e);
  p.deg = e * S.weights()[pv];

  std::vector<Monomial> plus = gens;
  plus.push_back(p);
  std::vector<Monomial> colon;
  for (const auto& g : gens) {
    Monomial q = g;
    int reduce_by = std::min<int>(g.exp[pv], e);
    q.exp[pv] = static_cast<std::uint16_t>(g.exp[pv] - reduce_by);
    q.deg -= reduce_by * S.weights()[pv];
    colon.push_back(q);
  }
  Laurent r = numerator(S, std::move(plus));
  add_into(r, numerator(S, std::move(colon)), 1, p.deg);
  return r;
}

std::vector<long long> to_dense(const Laurent& n, int& lo) {
  lo = n.begin()->first;
  int hi = n.rbegin()->first;
  std::vector<long long> c(static_cast<std::size_t>(hi - lo + 1), 0);
  for (const auto& [k, v] : n) c[static_cast<std::size_t>(k - lo)] = v;
  return c;
}

}  // namespace

HilbertTable hilbert_table(const PolyRing& S, std::span<const int> degs, const std::vector<FreeVector>& gb, int lo,
                           int hi) {
  HilbertTable t = make_table(lo, hi);
  std::vector<std::vector<Monomial>> leads(degs.size());
  for (const auto& g : gb) {
    if (g.is_zero()) continue;
    if (g.lead().comp >= degs.size()) throw ShapeError("basis element outside the free module");
    leads[g.lead().comp].push_back(g.lead().mono);
  }
  for (std::size_t c = 0; c < degs.size(); ++c) {
    for (int d = lo; d <= hi; ++d) {
      int e = d - degs[c];
      if (e < 0) continue;
      Monomial cur;
      long long count = 0;
      count_standard(S, leads[c], cur, 0, e, count);
      t.dims[static_cast<std::size_t>(d - lo)] += count;
    }
  }
  return t;
}

HilbertSeries hilbert_series(const PolyRing& S, std::span<const int> degs, const std::vector<FreeVector>& gb) {
  std::vector<std::vector<Monomial>> leads(degs.size());
  for (const auto& g : gb) {
    if (g.is_zero()) continue;
    if (g.lead().comp >= degs.size()) throw ShapeError("basis element outside the free module");
    leads[g.lead().comp].push_back(g.lead().mono);
  }
  HilbertSeries h;
  h.weights = S.weights();
  for (std::size_t c = 0; c < degs.size(); ++c) add_into(h.numerator, numerator(S, leads[c]), 1, degs[c]);
  return h;
}

int HilbertSeries::dimension() const {
  if (numerator.empty()) return -1;
  int lo = 0;
  std::vector<long long> c = to_dense(numerator, lo);
  int order = 0;
  while (!c.empty()) {
    long long sum = 0;
    for (auto v : c) sum += v;
    if (sum != 0) break;
    std::vector<long long> q(c.size() - 1);
    long long acc = 0;
    for (std::size_t k = 0; k + 1 < c.size(); ++k) {
      acc += c[k];
      q[k] = acc;
    }
    c = std::move(q);
    ++order;
  }
  return static_cast<int>(weights.size()) - order;
}

long long HilbertSeries::coefficient(int d) const {
  if (numerator.empty() || d < numerator.begin()->first) return 0;
  int top = d - numerator.begin()->first;
  std::vector<long long> mono_count(static_cast<std::size_t>(top + 1), 0);
  mono_count[0] = 1;
  for (int w : weights) {
    for (int e = w; e <= top; ++e) mono_count[static_cast<std::size_t>(e)] += mono_count[static_cast<std::size_t>(e - w)];
  }
  long long s = 0;
  for (const auto& [k, v] : numerator) {
    if (k > d) break;
    s += v * mono_count[static_cast<std::size_t>(d - k)];
  }
  return s;
}

HilbertTable HilbertSeries::finite_table() const {
  if (!finite_length()) throw PreconditionError("module does not have finite length");
  if (numerator.empty()) return HilbertTable{};
  int lo = 0;
  std::vector<long long> c = to_dense(numerator, lo);
  for (int w : weights) {
    auto ws = static_cast<std::size_t>(w);
    if (c.size() < ws) throw PreconditionError("Hilbert numerator is not divisible by the denominator");
    std::vector<long long> q(c.size() - ws, 0);
    for (std::size_t k = 0; k < q.size(); ++k) q[k] = c[k] + (k >= ws ? q[k - ws] : 0);
    for (std::size_t k = q.size(); k < c.size(); ++k) {
      long long expect = k >= ws ? q[k - ws] : 0;
      if (c[k] + expect != 0) throw PreconditionError("Hilbert numerator is not divisible by the denominator");
    }
    c = std::move(q);
  }
  HilbertTable t;
  t.lo = lo;
  t.dims = std::move(c);
  return t.trimmed();
}

HilbertSeries HilbertSeries::shifted(int t) const {
  HilbertSeries h;
  h.weights = weights;
  for (const auto& [k, v] : numerator) h.numerator[k - t] = v;
  return h;
}

int monomial_krull_dimension(std::span<const Monomial> gens, std::size_t nvars) {
  std::vector<std::uint32_t> supports;
  for (const auto& g : gens) {
    std::uint32_t s = 0;
    for (std::size_t v = 0; v < nvars; ++v) {
      if (g.exp[v]) s |= 1u << v;
    }
    if (s == 0) return -1;
    supports.push_back(s);
  }
  int best = 0;
  for (std::uint32_t u = 0; u < (1u << nvars); ++u) {
    int size = __builtin_popcount(u);
    if (size <= best) continue;
    bool independent = true;
    for (auto s : supports) {
      if ((s & ~u) == 0) {
        independent = false;
        break;
      }
    }
    if (independent) best = size;
  }
  return best;
}


namespace {

void enumerate(const PolyRing& S, std::size_t var, int remaining, Monomial& cur, std::vector<Monomial>& out) {
  const auto& w = S.weights();
  if (var + 1 == S.nvars()) {
    if (remaining % w[var]) return;
    cur.exp[var] = static_cast<std::uint16_t>(remaining / w[var]);
    cur.deg += remaining;
    out.push_back(cur);
    cur.deg -= remaining;
    cur.exp[var] = 0;
    return;
  }
  for (int e = 0; e * w[var] <= remaining; ++e) {
    cur.exp[var] = static_cast<std::uint16_t>(e);
    cur.deg += e * w[var];
    enumerate(S, var + 1, remaining - e * w[var], cur, out);
    cur.deg -= e * w[var];
  }
  cur.exp[var] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(const PolyRing& S, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  if (S.nvars() == 0) {
    if (d == 0) out.push_back(Monomial{});
    return out;
  }
  Monomial cur;
  enumerate(S, 0, d, cur, out);
  return out;
}

}  // namespace linkhom
