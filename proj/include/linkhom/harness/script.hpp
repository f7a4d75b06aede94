#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace linkhom {

/// Source position of a statement; ignored by equality so that
/// parse(pretty_print(s)) == s.
struct SourcePos {
  int line = 0;
  int col = 0;
  bool operator==(const SourcePos&) const { return true; }
};

/// `ring R = QQ[x,y]/(x*y);`, `ring F = GF(101)[x];` or `ring Q = R/(x);`.
/// `base` names an already declared ring; then `vars` is empty.
struct RingDecl {
  std::string name;
  std::string base;
  std::uint32_t characteristic = 0;
  std::vector<std::string> vars;
  /// Canonical printed polynomials.
  std::vector<std::string> relations;
  bool operator==(const RingDecl&) const = default;
};

/// `ideal I = R (x, y);`; `R ()` is the zero ideal.
struct IdealDecl {
  std::string name;
  std::string ring;
  std::vector<std::string> gens;
  bool operator==(const IdealDecl&) const = default;
};

enum class ModuleOp { Coker, Free, IdealQuotient, Residue, Syzygy, Transpose, Lambda, Twist, Sum, Canonical, BaseChange };

const char* keyword(ModuleOp op);

struct ModuleExpr {
  ModuleOp op = ModuleOp::Free;
  /// Ring operand (coker, free, residue, canonical, inline ideal_quotient, base_change target).
  std::string ring;
  /// Named ideal operand of ideal_quotient.
  std::string ideal;
  /// Module operands.
  std::vector<std::string> operands;
  /// coker rows: one row per generator, one entry per relation.
  std::vector<std::vector<std::string>> rows;
  /// Inline ideal_quotient generators.
  std::vector<std::string> gens;
  /// Generator degrees (coker, free) or the integer of syzygy / twist.
  std::vector<int> ints;
  bool operator==(const ModuleExpr&) const = default;
};

/// `module M = ...;` or `semidualizing C = ...;`.
struct ModuleDecl {
  std::string name;
  bool semidualizing = false;
  ModuleExpr expr;
  bool operator==(const ModuleDecl&) const = default;
};

struct SetStmt {
  std::string key;
  long long value = 0;
  bool operator==(const SetStmt&) const = default;
};

struct CheckArg {
  bool is_int = false;
  std::string name;
  long long value = 0;
  bool operator==(const CheckArg&) const = default;
};

struct CheckStmt {
  std::string id;
  std::vector<CheckArg> args;
  bool operator==(const CheckStmt&) const = default;
};

struct Statement {
  SourcePos pos;
  std::variant<RingDecl, IdealDecl, ModuleDecl, SetStmt, CheckStmt> body;
  bool operator==(const Statement&) const = default;
};

struct SessionScript {
  std::vector<Statement> statements;
  bool operator==(const SessionScript&) const = default;
};

/// Keys accepted by `set`.
const std::vector<std::string>& setting_keys();

/// Parses a whole script. Throws ParseError (line:col) on the first syntax error,
/// unknown or redeclared identifier, kind mismatch or check arity mismatch.
SessionScript parse_session(std::string_view text);

std::string pretty_print(const Statement& s);
std::string pretty_print(const SessionScript& s);

/// The name a statement declares, empty for set and check statements.
std::string declared_name(const Statement& s);
/// Names a statement refers to.
std::vector<std::string> referenced_names(const Statement& s);

}  // namespace linkhom
