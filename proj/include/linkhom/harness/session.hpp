#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "linkhom/harness/registry.hpp"
#include "linkhom/harness/report.hpp"
#include "linkhom/harness/workspace.hpp"

namespace linkhom {

struct SessionResult {
  ReportSettings settings;
  std::vector<CheckReport> reports;
  Summary summary;
  int exit_code = 0;
  /// emit_report of the reports.
  std::string json;
};

std::vector<CheckReport> run_checks(const Workspace& ws);
SessionResult run_session(const SessionScript& script, const SettingsOverride& over = {});
SessionResult run_script(std::string_view text, const SettingsOverride& over = {});

/// The built-in catalog as script text: both fields, every ring, module and check instance.
const std::string& catalog_source();
SessionResult run_catalog(const SettingsOverride& over = {});

}  // namespace linkhom
