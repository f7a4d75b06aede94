#include "linkhom/harness/workspace.hpp"

#include <array>
#include <set>

#include "linkhom/errors.hpp"
#include "linkhom/kernel/parse.hpp"
#include "linkhom/modules/homological.hpp"
#include "linkhom/theory/linkage.hpp"

namespace linkhom {

namespace {

Poly read_poly(const PolyRing& S, const std::string& text) { return parse_poly(S, text); }

constexpr std::array<int, 1> kDegZero = {0};

Ring make_checked_ring(PolyRing S, std::vector<Poly> gens) {
  for (const auto& g : gens) {
    if (!S.is_homogeneous(g, kDegZero)) {
      throw InputError("relation '" + S.to_string(g) +
                       "' is not homogeneous; only graded rings k[x]/I with I homogeneous are accepted, so that the "
                       "ring is local in the graded sense (linkage needs a semiperfect ring, i.e. a finite product of "
                       "local rings, and products are not decomposed)");
    }
  }
  Ring r = GradedRing::make(std::move(S), std::move(gens));
  if (r->is_zero_ring()) throw InputError("the ring is zero");
  return r;
}

}  // namespace

Workspace Workspace::build(const SessionScript& script, const SettingsOverride& over) {
  Workspace ws;
  ws.script_ = script;
  for (const auto& st : script.statements) {
    if (auto* s = std::get_if<SetStmt>(&st.body)) {
      if (s->key == "seed") ws.settings_.seed = static_cast<std::uint64_t>(s->value);
      if (s->key == "bound") ws.settings_.bound = static_cast<int>(s->value);
      if (s->key == "retries") ws.settings_.retries = static_cast<int>(s->value);
      if (s->key == "window_lo") ws.settings_.window_lo = static_cast<int>(s->value);
      if (s->key == "window_hi") ws.settings_.window_hi = static_cast<int>(s->value);
    }
  }
  if (over.seed) ws.settings_.seed = *over.seed;
  if (over.bound) ws.settings_.bound = *over.bound;
  if (over.retries) ws.settings_.retries = *over.retries;

  for (std::size_t k = 0; k < script.statements.size(); ++k) {
    const Statement& st = script.statements[k];
    const std::string name = declared_name(st);
    if (!name.empty()) ws.decl_index_[name] = k;
    try {
      if (auto* r = std::get_if<RingDecl>(&st.body)) {
        if (r->base.empty()) {
          PolyRing S(Field(r->characteristic), r->vars, {});
          std::vector<Poly> gens;
          for (const auto& t : r->relations) gens.push_back(read_poly(S, t));
          ws.rings_[r->name] = make_checked_ring(S, std::move(gens));
        } else {
          const Ring& base = ws.rings_.at(r->base);
          std::vector<Poly> gens = base->ideal_gens();
          for (const auto& t : r->relations) gens.push_back(read_poly(base->ambient(), t));
          ws.rings_[r->name] = make_checked_ring(base->ambient(), std::move(gens));
        }
      } else if (auto* i = std::get_if<IdealDecl>(&st.body)) {
        const Ring& R = ws.rings_.at(i->ring);
        std::vector<Poly> gens;
        for (const auto& t : i->gens) {
          Poly p = read_poly(R->ambient(), t);
          if (!R->ambient().is_homogeneous(p, kDegZero)) throw InputError("ideal generator '" + t + "' is not homogeneous");
          gens.push_back(std::move(p));
        }
        ws.ideals_[i->name] = make_ideal(R, std::move(gens));
      } else if (auto* m = std::get_if<ModuleDecl>(&st.body)) {
        const ModuleExpr& e = m->expr;
        FPModule value;
        switch (e.op) {
          case ModuleOp::Coker: {
            const Ring& R = ws.rings_.at(e.ring);
            const PolyRing& S = R->ambient();
            std::vector<FreeVector> cols(e.rows.front().size());
            for (std::size_t i = 0; i < e.rows.size(); ++i) {
              for (std::size_t j = 0; j < cols.size(); ++j) {
                cols[j] = S.add(cols[j], S.embed(read_poly(S, e.rows[i][j]), static_cast<std::uint32_t>(i)));
              }
            }
            std::vector<FreeVector> kept;
            for (auto& c : cols) {
              if (!c.is_zero()) kept.push_back(std::move(c));
            }
            Matrix rel;
            rel.row_degs = e.ints;
            rel.col_degs = infer_col_degs(S, kept, e.ints, 0);
            rel.cols = std::move(kept);
            value = FPModule(R, std::move(rel));
            break;
          }
          case ModuleOp::Free: value = FPModule::free(ws.rings_.at(e.ring), e.ints); break;
          case ModuleOp::IdealQuotient: {
            if (!e.ideal.empty()) {
              value = FPModule::cyclic(ws.ideals_.at(e.ideal), 0);
            } else {
              const Ring& R = ws.rings_.at(e.ring);
              std::vector<Poly> gens;
              for (const auto& t : e.gens) {
                Poly p = read_poly(R->ambient(), t);
                if (!R->ambient().is_homogeneous(p, kDegZero)) {
                  throw InputError("ideal generator '" + t + "' is not homogeneous");
                }
                gens.push_back(std::move(p));
              }
              value = FPModule::cyclic(make_ideal(R, std::move(gens)), 0);
            }
            break;
          }
          case ModuleOp::Residue: value = residue_field(ws.rings_.at(e.ring)); break;
          case ModuleOp::Canonical: value = canonical_module(ws.rings_.at(e.ring)); break;
          case ModuleOp::Syzygy: value = syzygy(ws.module(e.operands[0]), e.ints[0]); break;
          case ModuleOp::Transpose: value = transpose(ws.module(e.operands[0])); break;
          case ModuleOp::Lambda: value = lambda(ws.module(e.operands[0])); break;
          case ModuleOp::Twist: value = twist(ws.module(e.operands[0]), e.ints[0]); break;
          case ModuleOp::Sum: value = direct_sum(ws.module(e.operands[0]), ws.module(e.operands[1])); break;
          case ModuleOp::BaseChange: value = base_change(ws.module(e.operands[0]), ws.rings_.at(e.ring)); break;
        }
        if (m->semidualizing) {
          ws.semis_[m->name] = is_semidualizing(value, ws.settings_.bound);
        } else {
          ws.modules_[m->name] = value;
        }
      }
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& ex) {
      throw ParseError(ex.what(), st.pos.line, st.pos.col);
    }
  }
  return ws;
}

const Ring& Workspace::ring(const std::string& name) const {
  auto it = rings_.find(name);
  if (it == rings_.end()) throw InputError("unbound ring '" + name + "'");
  return it->second;
}

const Ideal& Workspace::ideal(const std::string& name) const {
  auto it = ideals_.find(name);
  if (it == ideals_.end()) throw InputError("unbound ideal '" + name + "'");
  return it->second;
}

const FPModule& Workspace::module(const std::string& name) const {
  auto it = modules_.find(name);
  if (it != modules_.end()) return it->second;
  auto s = semis_.find(name);
  if (s != semis_.end()) return s->second.module;
  throw InputError("unbound module '" + name + "'");
}

const SemidualizingModule& Workspace::semidualizing(const std::string& name) const {
  auto it = semis_.find(name);
  if (it == semis_.end()) throw InputError("unbound semidualizing module '" + name + "'");
  return it->second;
}

std::string Workspace::kind(const std::string& name) const {
  if (rings_.count(name)) return "ring";
  if (ideals_.count(name)) return "ideal";
  if (modules_.count(name)) return "module";
  if (semis_.count(name)) return "semidualizing";
  throw InputError("unbound name '" + name + "'");
}

std::string Workspace::hash(const std::string& name) const {
  if (auto it = rings_.find(name); it != rings_.end()) return fnv_hex(it->second->to_string());
  if (auto it = ideals_.find(name); it != ideals_.end()) {
    return fnv_hex(it->second.ring->to_string() + "|" + to_string(it->second));
  }
  return hex64(module_hash(module(name)));
}

std::vector<CheckStmt> Workspace::checks() const {
  std::vector<CheckStmt> out;
  for (const auto& st : script_.statements) {
    if (auto* c = std::get_if<CheckStmt>(&st.body)) out.push_back(*c);
  }
  return out;
}

IsoOptions Workspace::iso_options(bool allow_twist) const {
  IsoOptions o;
  o.allow_twist = allow_twist;
  o.seed = settings_.seed;
  o.retries = settings_.retries;
  return o;
}

HilbertTable Workspace::table(const FPModule& m) const {
  if (m.is_zero()) return HilbertTable{};
  if (m.finite_length()) return m.hilbert_series().finite_table();
  auto [lo, hi] = default_window(m);
  if (settings_.window_lo) lo = *settings_.window_lo;
  if (settings_.window_hi) hi = *settings_.window_hi;
  return m.hilbert_table(lo, hi);
}

std::string Workspace::rerun_snippet(const CheckStmt& c) const {
  std::set<std::string> need;
  std::vector<std::string> todo;
  for (const auto& a : c.args) {
    if (!a.is_int) todo.push_back(a.name);
  }
  while (!todo.empty()) {
    std::string n = todo.back();
    todo.pop_back();
    if (!need.insert(n).second) continue;
    auto it = decl_index_.find(n);
    if (it == decl_index_.end()) continue;
    for (const auto& r : referenced_names(script_.statements[it->second])) todo.push_back(r);
  }
  std::string out;
  for (const auto& st : script_.statements) {
    const std::string n = declared_name(st);
    if (!n.empty() && need.count(n)) out += pretty_print(st) + "\n";
  }
  out += "set seed = " + std::to_string(settings_.seed) + ";\n";
  if (settings_.bound >= 0) out += "set bound = " + std::to_string(settings_.bound) + ";\n";
  out += "set retries = " + std::to_string(settings_.retries) + ";\n";
  if (settings_.window_lo) out += "set window_lo = " + std::to_string(*settings_.window_lo) + ";\n";
  if (settings_.window_hi) out += "set window_hi = " + std::to_string(*settings_.window_hi) + ";\n";
  Statement s;
  s.body = c;
  out += pretty_print(s) + "\n";
  return out;
}

}  // namespace linkhom
