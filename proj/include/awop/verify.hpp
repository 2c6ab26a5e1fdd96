#pragma once

#include <optional>
#include <string>
#include <vector>

#include "awop/qcore.hpp"

namespace awop {

struct SuiteResult {
  std::string name;
  bool pass = false;
  double residual = 0.0;   // worst measured figure for the suite
  double threshold = 0.0;  // what it was compared against
  std::string detail;
};

struct VerifyOptions {
  std::optional<double> q;    // override the default q sweep where applicable
  std::optional<double> tol;  // override every pass threshold
  int degree = 128;
  int grid_m = 256;
  Tolerance series_tol{};
};

// The named invariants the verify command runs, in print order.
const std::vector<std::string>& verify_suite_names();

// Runs one suite by name; throws std::invalid_argument for unknown names.
SuiteResult run_verify_suite(const std::string& name, const VerifyOptions& opt);

}  // namespace awop
