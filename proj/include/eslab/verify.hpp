#pragma once
// self-contained verification suites: each bundles oracle and bound checks
// for one slice of the library and reports machine-readable pass/fail items

#include <string>
#include <vector>

namespace eslab {

struct CheckResult {
  std::string id;
  bool pass = false;
  double measured = 0.0;
  double bound = 0.0;
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;
  bool pass = true;
};

// the suites accepted by `verify <suite>`
std::vector<std::string> suite_names();

// runs one suite by name; throws std::invalid_argument for unknown names
SuiteResult verify_suite(const std::string& name);

// fin/corner separation of the three-pronged surface and the bubble
// metric-density slope; consumed by the acceptance harness
SuiteResult figure_suite();

// {suite: {checks: [{id, status, measured, bound}], pass}}
std::string report_json(const std::vector<SuiteResult>& suites);

} // namespace eslab
