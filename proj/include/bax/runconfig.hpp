#pragma once

#include <optional>
#include <string>
#include <vector>

namespace bax {

struct OracleParams {
  long p = 3;
  int M = 3;
};

// Shared settings for the command-line surface; an INI config file mirrors
// these fields flatly and the command line overrides it.
struct RunConfig {
  std::string group = "A1";
  int depth = 4;
  std::string v_mode = "formal";  // formal | rational
  std::string v_value = "1/2";    // substituted for v when v_mode == rational
  std::optional<OracleParams> oracle;
  std::string suite = "all";
  std::string output;  // optional path for the JSON report
};

// throws std::invalid_argument when a field violates its contract
void validate_config(const RunConfig& c);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool pass() const;
};

std::vector<std::string> suite_names();

// Run the configured verification suite; "all" expands to every suite that
// applies to the configured group.
std::vector<SuiteReport> run_suites(const RunConfig& c);

}  // namespace bax
