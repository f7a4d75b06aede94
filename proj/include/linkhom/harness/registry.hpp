#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "linkhom/harness/report.hpp"
#include "linkhom/harness/script.hpp"

namespace linkhom {

class Workspace;

enum class ArgKind { Module, Semidualizing, Ideal, Int };
const char* to_string(ArgKind k);

struct CheckSignature {
  std::string id;
  std::vector<ArgKind> args;
  std::vector<std::string> arg_names;
  /// The statement being checked, in words.
  std::string statement;
};

/// All registered checks, sorted by id.
const std::vector<CheckSignature>& check_signatures();
const CheckSignature* find_check(std::string_view id);

/// Evaluates the hypotheses, computes both sides of the statement and compares them.
/// Library errors during the computation become an undetermined verdict with the message attached.
CheckReport run_check(const Workspace& ws, const CheckStmt& stmt);

}  // namespace linkhom
