#pragma once

#include <string>
#include <vector>

namespace mzsim {

// Self-check suites comparing the closed-form expressions against the
// brute-force tensor evolution, plus the structural invariants.

struct SuiteResult {
  std::string name;
  double max_deviation = 0.0;
  double tol = 0.0;
  bool pass = false;
  std::string worst;  // human-readable worst cell, e.g. "c=0.3 theta=1.2"
};

// grid is the point count per axis for the (c, theta) sweeps.
std::vector<SuiteResult> run_verification(int grid, double tol);

}  // namespace mzsim
