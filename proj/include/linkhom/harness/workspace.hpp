#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "linkhom/harness/report.hpp"
#include "linkhom/harness/script.hpp"
#include "linkhom/kernel/ideal.hpp"
#include "linkhom/modules/iso.hpp"
#include "linkhom/theory/semidualizing.hpp"

namespace linkhom {

/// Command line values that take precedence over `set` statements.
struct SettingsOverride {
  std::optional<std::uint64_t> seed;
  std::optional<int> bound;
  std::optional<int> retries;
};

/// Bindings of a parsed script, evaluated once and then read-only.
class Workspace {
 public:
  /// Applies every `set` statement first (so settings are script-wide), then the
  /// overrides, then evaluates declarations in order. Evaluation errors are
  /// reported as ParseError at the offending statement.
  static Workspace build(const SessionScript& script, const SettingsOverride& over = {});

  const ReportSettings& settings() const { return settings_; }
  const SessionScript& script() const { return script_; }

  const Ring& ring(const std::string& name) const;
  const Ideal& ideal(const std::string& name) const;
  /// Modules and semidualizing modules.
  const FPModule& module(const std::string& name) const;
  const SemidualizingModule& semidualizing(const std::string& name) const;
  std::string kind(const std::string& name) const;
  std::string hash(const std::string& name) const;

  std::vector<CheckStmt> checks() const;

  /// The bound to pass to bounded computations (-1 selects the per-ring default).
  int bound() const { return settings_.bound; }
  IsoOptions iso_options(bool allow_twist) const;
  /// Table used in reports: the full table for finite length modules, else the
  /// window from the settings or the default window.
  HilbertTable table(const FPModule& m) const;
  /// Declarations needed by the check, in script order, followed by the settings and the check itself.
  std::string rerun_snippet(const CheckStmt& c) const;

 private:
  SessionScript script_;
  ReportSettings settings_;
  std::map<std::string, Ring> rings_;
  std::map<std::string, Ideal> ideals_;
  std::map<std::string, FPModule> modules_;
  std::map<std::string, SemidualizingModule> semis_;
  std::map<std::string, std::size_t> decl_index_;
};

}  // namespace linkhom
