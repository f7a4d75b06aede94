#include "linkhom/harness/script.hpp"

#include <map>
#include <set>

#include "linkhom/harness/registry.hpp"
#include "linkhom/kernel/parse.hpp"

namespace linkhom {

const char* keyword(ModuleOp op) {
  switch (op) {
    case ModuleOp::Coker: return "coker";
    case ModuleOp::Free: return "free";
    case ModuleOp::IdealQuotient: return "ideal_quotient";
    case ModuleOp::Residue: return "residue";
    case ModuleOp::Syzygy: return "syzygy";
    case ModuleOp::Transpose: return "transpose";
    case ModuleOp::Lambda: return "lambda";
    case ModuleOp::Twist: return "twist";
    case ModuleOp::Sum: return "sum";
    case ModuleOp::Canonical: return "canonical";
    case ModuleOp::BaseChange: return "base_change";
  }
  return "?";
}

const std::vector<std::string>& setting_keys() {
  static const std::vector<std::string> keys = {"bound", "retries", "seed", "window_hi", "window_lo"};
  return keys;
}

namespace {

enum class Kind { Ring, Ideal, Module, Semidualizing };

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::Ring: return "ring";
    case Kind::Ideal: return "ideal";
    case Kind::Module: return "module";
    case Kind::Semidualizing: return "semidualizing module";
  }
  return "?";
}

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

const std::set<std::string>& reserved() {
  static const std::set<std::string> words = {"ring", "module", "ideal", "semidualizing", "check", "set", "gens", "QQ",
                                              "GF"};
  return words;
}

struct Symbol {
  Kind kind;
  // The ambient polynomial ring, used to read polynomials.
  std::string ring;
};

class ScriptParser {
 public:
  explicit ScriptParser(std::string_view text) : lex_(text) {}

  SessionScript run() {
    SessionScript out;
    while (!lex_.at_end()) out.statements.push_back(statement());
    return out;
  }

 private:
  Statement statement() {
    Statement s;
    const Token& t = lex_.peek();
    s.pos = {t.line, t.col};
    if (lex_.is_ident("ring")) {
      s.body = ring_decl();
    } else if (lex_.is_ident("ideal")) {
      s.body = ideal_decl();
    } else if (lex_.is_ident("module") || lex_.is_ident("semidualizing")) {
      s.body = module_decl();
    } else if (lex_.is_ident("set")) {
      s.body = set_stmt();
    } else if (lex_.is_ident("check")) {
      s.body = check_stmt();
    } else {
      lex_.fail("expected one of 'ring', 'module', 'ideal', 'semidualizing', 'check', 'set'");
    }
    lex_.expect(';');
    return s;
  }

  std::string new_name() {
    Token t = lex_.expect_ident("a name");
    if (reserved().count(t.text)) throw ParseError("'" + t.text + "' is a keyword", t.line, t.col);
    if (symbols_.count(t.text)) throw ParseError("'" + t.text + "' is already declared", t.line, t.col);
    return t.text;
  }

  const Symbol& lookup(const Token& t) const {
    auto it = symbols_.find(t.text);
    if (it == symbols_.end()) throw ParseError("unknown identifier '" + t.text + "'", t.line, t.col);
    return it->second;
  }

  const Symbol& expect_symbol(std::initializer_list<Kind> kinds, const char* what) {
    Token t = lex_.expect_ident(what);
    const Symbol& s = lookup(t);
    for (Kind k : kinds) {
      if (s.kind == k) return s;
    }
    throw ParseError("'" + t.text + "' is a " + kind_name(s.kind) + ", expected " + what, t.line, t.col);
  }

  std::string expect_named(std::initializer_list<Kind> kinds, const char* what) {
    const Token& t = lex_.peek();
    std::string name = t.text;
    expect_symbol(kinds, what);
    return name;
  }

  std::string poly(const std::string& ring) {
    const PolyRing& S = rings_.at(ring);
    return S.to_string(parse_poly(S, lex_));
  }

  std::vector<std::string> poly_list(const std::string& ring) {
    std::vector<std::string> out;
    lex_.expect('(');
    if (!lex_.is_punct(')')) {
      do {
        out.push_back(poly(ring));
      } while (lex_.accept(','));
    }
    lex_.expect(')');
    return out;
  }

  std::vector<int> int_list() {
    std::vector<int> out;
    lex_.expect('[');
    if (!lex_.is_punct(']')) {
      do {
        out.push_back(static_cast<int>(lex_.expect_int("an integer")));
      } while (lex_.accept(','));
    }
    lex_.expect(']');
    return out;
  }

  RingDecl ring_decl() {
    lex_.next();
    RingDecl d;
    d.name = new_name();
    lex_.expect('=');
    if (lex_.is_ident("QQ") || lex_.is_ident("GF")) {
      if (lex_.is_ident("GF")) {
        lex_.next();
        lex_.expect('(');
        const Token& at = lex_.peek();
        long long p = lex_.expect_int("a prime");
        if (p >= (1LL << 31) || !is_prime(p)) throw ParseError("GF(p) needs a prime p < 2^31", at.line, at.col);
        d.characteristic = static_cast<std::uint32_t>(p);
        lex_.expect(')');
      } else {
        lex_.next();
      }
      lex_.expect('[');
      std::set<std::string> seen;
      do {
        Token v = lex_.expect_ident("a variable name");
        if (!seen.insert(v.text).second) throw ParseError("variable '" + v.text + "' repeated", v.line, v.col);
        d.vars.push_back(v.text);
      } while (lex_.accept(','));
      lex_.expect(']');
      if (d.vars.size() > kMaxVars) lex_.fail("too many variables");
      rings_.emplace(d.name, PolyRing(Field(d.characteristic), d.vars, {}));
    } else {
      d.base = expect_named({Kind::Ring}, "a field (QQ or GF(p)) or a ring");
      rings_.emplace(d.name, rings_.at(d.base));
      if (!lex_.is_punct('/')) lex_.fail("expected '/' after the base ring");
    }
    if (lex_.accept('/')) d.relations = poly_list(d.name);
    declare(d.name, {Kind::Ring, d.name});
    return d;
  }

  IdealDecl ideal_decl() {
    lex_.next();
    IdealDecl d;
    d.name = new_name();
    lex_.expect('=');
    d.ring = expect_named({Kind::Ring}, "a ring");
    d.gens = poly_list(d.ring);
    declare(d.name, {Kind::Ideal, d.ring});
    return d;
  }

  ModuleDecl module_decl() {
    ModuleDecl d;
    d.semidualizing = lex_.is_ident("semidualizing");
    lex_.next();
    d.name = new_name();
    lex_.expect('=');
    std::string ring;
    d.expr = module_expr(ring);
    declare(d.name, {d.semidualizing ? Kind::Semidualizing : Kind::Module, ring});
    return d;
  }

  std::string module_operand() {
    const Token& t = lex_.peek();
    std::string name = t.text;
    const Symbol& s = expect_symbol({Kind::Module, Kind::Semidualizing}, "a module");
    (void)s;
    return name;
  }

  ModuleExpr module_expr(std::string& ring) {
    ModuleExpr e;
    Token op = lex_.expect_ident("a module expression");
    const std::map<std::string, ModuleOp> ops = {
        {"coker", ModuleOp::Coker},         {"free", ModuleOp::Free},
        {"ideal_quotient", ModuleOp::IdealQuotient}, {"residue", ModuleOp::Residue},
        {"syzygy", ModuleOp::Syzygy},       {"transpose", ModuleOp::Transpose},
        {"lambda", ModuleOp::Lambda},       {"twist", ModuleOp::Twist},
        {"sum", ModuleOp::Sum},             {"canonical", ModuleOp::Canonical},
        {"base_change", ModuleOp::BaseChange}};
    auto it = ops.find(op.text);
    if (it == ops.end()) {
      throw ParseError("unknown module expression '" + op.text +
                           "'; expected coker, free, ideal_quotient, residue, syzygy, transpose, lambda, twist, "
                           "sum, canonical or base_change",
                       op.line, op.col);
    }
    e.op = it->second;
    switch (e.op) {
      case ModuleOp::Coker: {
        e.ring = expect_named({Kind::Ring}, "a ring");
        ring = e.ring;
        lex_.expect('[');
        do {
          lex_.expect('[');
          std::vector<std::string> row;
          do {
            row.push_back(poly(e.ring));
          } while (lex_.accept(','));
          const Token& close = lex_.peek();
          lex_.expect(']');
          if (!e.rows.empty() && row.size() != e.rows.front().size()) {
            throw ParseError("rows of a matrix must have equal length", close.line, close.col);
          }
          e.rows.push_back(std::move(row));
        } while (lex_.accept(','));
        lex_.expect(']');
        if (!lex_.is_ident("gens")) lex_.fail("expected 'gens'");
        lex_.next();
        const Token& at = lex_.peek();
        e.ints = int_list();
        if (e.ints.size() != e.rows.size()) {
          throw ParseError("the matrix has " + std::to_string(e.rows.size()) + " rows but " +
                               std::to_string(e.ints.size()) + " generator degrees are given",
                           at.line, at.col);
        }
        break;
      }
      case ModuleOp::Free:
        e.ring = expect_named({Kind::Ring}, "a ring");
        ring = e.ring;
        e.ints = int_list();
        break;
      case ModuleOp::IdealQuotient: {
        Token t = lex_.expect_ident("a ring or an ideal");
        const Symbol& s = lookup(t);
        if (s.kind == Kind::Ring) {
          e.ring = t.text;
          e.gens = poly_list(e.ring);
        } else if (s.kind == Kind::Ideal) {
          e.ideal = t.text;
        } else {
          throw ParseError("'" + t.text + "' is a " + kind_name(s.kind) + ", expected a ring or an ideal", t.line,
                           t.col);
        }
        ring = s.ring;
        break;
      }
      case ModuleOp::Residue:
      case ModuleOp::Canonical:
        e.ring = expect_named({Kind::Ring}, "a ring");
        ring = e.ring;
        break;
      case ModuleOp::Syzygy:
      case ModuleOp::Twist: {
        e.operands.push_back(module_operand());
        ring = symbols_.at(e.operands[0]).ring;
        const Token& at = lex_.peek();
        long long v = lex_.expect_int("an integer");
        if (e.op == ModuleOp::Syzygy && v < 0) throw ParseError("syzygy index must be nonnegative", at.line, at.col);
        e.ints.push_back(static_cast<int>(v));
        break;
      }
      case ModuleOp::Transpose:
      case ModuleOp::Lambda:
        e.operands.push_back(module_operand());
        ring = symbols_.at(e.operands[0]).ring;
        break;
      case ModuleOp::Sum:
        e.operands.push_back(module_operand());
        e.operands.push_back(module_operand());
        ring = symbols_.at(e.operands[0]).ring;
        break;
      case ModuleOp::BaseChange:
        e.operands.push_back(module_operand());
        e.ring = expect_named({Kind::Ring}, "a ring");
        ring = e.ring;
        break;
    }
    return e;
  }

  SetStmt set_stmt() {
    lex_.next();
    SetStmt s;
    Token k = lex_.expect_ident("a setting name");
    bool known = false;
    for (const auto& key : setting_keys()) known = known || key == k.text;
    if (!known) throw ParseError("unknown setting '" + k.text + "'", k.line, k.col);
    s.key = k.text;
    lex_.expect('=');
    const Token& at = lex_.peek();
    s.value = lex_.expect_int("an integer");
    if ((s.key == "seed" || s.key == "retries") && s.value < 0) {
      throw ParseError(s.key + " must be nonnegative", at.line, at.col);
    }
    return s;
  }

  CheckStmt check_stmt() {
    lex_.next();
    CheckStmt c;
    Token id = lex_.expect_ident("a check id");
    const CheckSignature* sig = find_check(id.text);
    if (!sig) throw ParseError("unknown check '" + id.text + "'", id.line, id.col);
    c.id = id.text;
    for (std::size_t k = 0; !lex_.is_punct(';'); ++k) {
      const Token& t = lex_.peek();
      if (t.kind == Token::Kind::End) lex_.fail("expected ';'");
      if (k >= sig->args.size()) {
        throw ParseError("check '" + c.id + "' takes " + std::to_string(sig->args.size()) + " arguments", t.line,
                         t.col);
      }
      CheckArg a;
      switch (sig->args[k]) {
        case ArgKind::Int:
          a.is_int = true;
          a.value = lex_.expect_int("an integer argument");
          break;
        case ArgKind::Module:
          a.name = expect_named({Kind::Module, Kind::Semidualizing}, "a module");
          break;
        case ArgKind::Semidualizing:
          a.name = expect_named({Kind::Semidualizing}, "a semidualizing module");
          break;
        case ArgKind::Ideal:
          a.name = expect_named({Kind::Ideal}, "an ideal");
          break;
      }
      c.args.push_back(std::move(a));
    }
    if (c.args.size() != sig->args.size()) {
      lex_.fail("check '" + c.id + "' takes " + std::to_string(sig->args.size()) + " arguments, got " +
                std::to_string(c.args.size()));
    }
    return c;
  }

  void declare(const std::string& name, Symbol s) { symbols_.emplace(name, std::move(s)); }

  Lexer lex_;
  std::map<std::string, Symbol> symbols_;
  std::map<std::string, PolyRing> rings_;
};

std::string join(const std::vector<std::string>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += xs[i];
  }
  return out;
}

std::string join_ints(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(xs[i]);
  }
  return out;
}

std::string print_expr(const ModuleExpr& e) {
  std::string out = keyword(e.op);
  switch (e.op) {
    case ModuleOp::Coker: {
      out += " " + e.ring + " [";
      for (std::size_t i = 0; i < e.rows.size(); ++i) {
        if (i) out += ", ";
        out += "[" + join(e.rows[i]) + "]";
      }
      out += "] gens [" + join_ints(e.ints) + "]";
      break;
    }
    case ModuleOp::Free: out += " " + e.ring + " [" + join_ints(e.ints) + "]"; break;
    case ModuleOp::IdealQuotient:
      out += e.ideal.empty() ? " " + e.ring + " (" + join(e.gens) + ")" : " " + e.ideal;
      break;
    case ModuleOp::Residue:
    case ModuleOp::Canonical: out += " " + e.ring; break;
    case ModuleOp::Syzygy:
    case ModuleOp::Twist: out += " " + e.operands[0] + " " + std::to_string(e.ints[0]); break;
    case ModuleOp::Transpose:
    case ModuleOp::Lambda: out += " " + e.operands[0]; break;
    case ModuleOp::Sum: out += " " + e.operands[0] + " " + e.operands[1]; break;
    case ModuleOp::BaseChange: out += " " + e.operands[0] + " " + e.ring; break;
  }
  return out;
}

}  // namespace

SessionScript parse_session(std::string_view text) { return ScriptParser(text).run(); }

std::string pretty_print(const Statement& s) {
  return std::visit(
      [](const auto& b) -> std::string {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, RingDecl>) {
          std::string out = "ring " + b.name + " = ";
          if (b.base.empty()) {
            out += b.characteristic == 0 ? std::string("QQ") : "GF(" + std::to_string(b.characteristic) + ")";
            out += "[" + join(b.vars) + "]";
            if (!b.relations.empty()) out += "/(" + join(b.relations) + ")";
          } else {
            out += b.base + "/(" + join(b.relations) + ")";
          }
          return out + ";";
        } else if constexpr (std::is_same_v<T, IdealDecl>) {
          return "ideal " + b.name + " = " + b.ring + " (" + join(b.gens) + ");";
        } else if constexpr (std::is_same_v<T, ModuleDecl>) {
          return std::string(b.semidualizing ? "semidualizing " : "module ") + b.name + " = " + print_expr(b.expr) +
                 ";";
        } else if constexpr (std::is_same_v<T, SetStmt>) {
          return "set " + b.key + " = " + std::to_string(b.value) + ";";
        } else {
          std::string out = "check " + b.id;
          for (const auto& a : b.args) out += " " + (a.is_int ? std::to_string(a.value) : a.name);
          return out + ";";
        }
      },
      s.body);
}

std::string pretty_print(const SessionScript& s) {
  std::string out;
  for (const auto& st : s.statements) out += pretty_print(st) + "\n";
  return out;
}

std::string declared_name(const Statement& s) {
  if (auto* r = std::get_if<RingDecl>(&s.body)) return r->name;
  if (auto* i = std::get_if<IdealDecl>(&s.body)) return i->name;
  if (auto* m = std::get_if<ModuleDecl>(&s.body)) return m->name;
  return {};
}

std::vector<std::string> referenced_names(const Statement& s) {
  std::vector<std::string> out;
  if (auto* r = std::get_if<RingDecl>(&s.body)) {
    if (!r->base.empty()) out.push_back(r->base);
  } else if (auto* i = std::get_if<IdealDecl>(&s.body)) {
    out.push_back(i->ring);
  } else if (auto* m = std::get_if<ModuleDecl>(&s.body)) {
    const ModuleExpr& e = m->expr;
    if (!e.ring.empty()) out.push_back(e.ring);
    if (!e.ideal.empty()) out.push_back(e.ideal);
    for (const auto& o : e.operands) out.push_back(o);
  } else if (auto* c = std::get_if<CheckStmt>(&s.body)) {
    for (const auto& a : c->args) {
      if (!a.is_int) out.push_back(a.name);
    }
  }
  return out;
}

}  // namespace linkhom
