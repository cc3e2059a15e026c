#pragma once

#include <string>
#include <vector>

#include "radmom/config.hpp"

namespace radmom {

struct CheckResult {
  std::string check_id;
  std::string identity; // short statement of what is being verified
  double residual = 0.0;
  double tolerance = 0.0;
  bool lower_bound = false; // pass means residual > tolerance (erratum-style checks)
  bool pass = false;
};

// Runs the full invariant suite at the configured sizes.
std::vector<CheckResult> run_all_checks(const RunConfig& cfg);

std::string format_check_table(const std::vector<CheckResult>& results);

} // namespace radmom
