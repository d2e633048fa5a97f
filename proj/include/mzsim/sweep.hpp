#pragma once

#include <string>
#include <vector>

#include "mzsim/scenarios.hpp"

namespace mzsim {

// Parameter grids over (alpha or C) x theta. The theta axis is in the
// closed-form convention; physical retarder phases are derived through
// phase_convention_map. All cells are computed by the numeric path.

enum class SweepAxis { alpha, c };

struct Range {
  double lo = 0.0;
  double hi = 0.0;
  int steps = 0;
};

struct SweepGrid {
  ScenarioKind scenario;
  SweepAxis axis;
  std::vector<double> axis1;   // alpha or c values
  std::vector<double> thetas;
  // Row = axis1 index, column = theta index.
  std::vector<std::vector<double>> p00, p11, p01, p10;
};

// Throws std::invalid_argument unless steps >= 2 and lo < hi.
std::vector<double> linspace(const Range& r);

SweepGrid run_sweep(ScenarioKind scenario, SweepAxis axis, const Range& axis1,
                    const Range& thetas);

// Header `alpha,theta,...` or `c,theta,...`; axis1 outer, theta inner;
// shortest round-trip number formatting, '\n' line endings.
std::string to_csv(const SweepGrid& grid);

std::string to_json(const SweepGrid& grid);

// Concurrence-vs-alpha curve, CSV with header `alpha,C`.
std::string concurrence_csv(const Range& alphas);

}  // namespace mzsim
