#pragma once

// The cross-verification harness: every check pits an implementation
// against an independent route (recurrence vs. extended-graph roots,
// arithmetic criteria vs. finite-field brute force, characters vs.
// crystal counting) and reports exact pass/fail results.

#include <string>
#include <vector>

#include "qvs/numeric.hpp"

namespace qvs {

struct CheckResult {
  std::string suite;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

// Suites: mult, faces, hnjh, cbstrata, alevectors, crystal, duality,
// maya, tensor, localmodel.  An empty filter runs everything.
std::vector<CheckResult> run_acceptance(const std::vector<std::string>& suites,
                                        unsigned long long seed);

std::vector<std::string> acceptance_suites();

}  // namespace qvs
