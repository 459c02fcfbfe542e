#pragma once

#include <string>
#include <vector>

namespace planch {

struct SuiteResult {
  std::string name;
  bool pass = false;
  std::string detail;  // empty on success, first counterexample otherwise
};

// Registered identity suites, in run order. Each suite cross-checks one
// layer of formulas against an independent derivation path (second closed
// form, brute-force enumeration, series or quadrature oracle).
std::vector<std::string> verify_suite_names();

// Runs one suite; InputError for unknown names.
SuiteResult run_suite(const std::string& name);

// Runs all suites, or only the named ones.
std::vector<SuiteResult> run_suites(const std::vector<std::string>& only = {});

}  // namespace planch
