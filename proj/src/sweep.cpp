#include "mzsim/sweep.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "mzsim/numformat.hpp"

namespace mzsim {

std::vector<double> linspace(const Range& r) {
  if (r.steps < 2) throw std::invalid_argument("range needs at least 2 steps");
  if (!(r.lo < r.hi)) throw std::invalid_argument("range needs lo < hi");
  std::vector<double> v(r.steps);
  for (int i = 0; i < r.steps; ++i)
    v[i] = r.lo + (r.hi - r.lo) * static_cast<double>(i) / (r.steps - 1);
  return v;
}

SweepGrid run_sweep(ScenarioKind scenario, SweepAxis axis, const Range& axis1,
                    const Range& thetas) {
  SweepGrid g;
  g.scenario = scenario;
  g.axis = axis;
  g.axis1 = linspace(axis1);
  g.thetas = linspace(thetas);
  const std::size_t rows = g.axis1.size(), cols = g.thetas.size();
  for (auto* m : {&g.p00, &g.p11, &g.p01, &g.p10})
    m->assign(rows, std::vector<double>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    const TwoQuantonState source = axis == SweepAxis::alpha
                                       ? correlated_pair_state(g.axis1[i])
                                       : state_from_concurrence(g.axis1[i]);
    for (std::size_t j = 0; j < cols; ++j) {
      const auto [amps, jp] =
          scenario_numeric(scenario, source, phase_convention_map(scenario, g.thetas[j]));
      g.p00[i][j] = jp.p00;
      g.p11[i][j] = jp.p11;
      g.p01[i][j] = jp.p01;
      g.p10[i][j] = jp.p10;
    }
  }
  return g;
}

namespace {
const char* axis_name(SweepAxis a) { return a == SweepAxis::alpha ? "alpha" : "c"; }
const char* scenario_name(ScenarioKind k) { return k == ScenarioKind::p_bs ? "pbs" : "bspbs"; }
}  // namespace

std::string to_csv(const SweepGrid& grid) {
  std::ostringstream out;
  out << axis_name(grid.axis) << ",theta,p00,p11,p01,p10\n";
  for (std::size_t i = 0; i < grid.axis1.size(); ++i) {
    for (std::size_t j = 0; j < grid.thetas.size(); ++j) {
      out << format_double(grid.axis1[i]) << ',' << format_double(grid.thetas[j]) << ','
          << format_double(grid.p00[i][j]) << ',' << format_double(grid.p11[i][j]) << ','
          << format_double(grid.p01[i][j]) << ',' << format_double(grid.p10[i][j]) << '\n';
    }
  }
  return out.str();
}

std::string to_json(const SweepGrid& grid) {
  nlohmann::json j;
  j["scenario"] = scenario_name(grid.scenario);
  j["axis1"] = {{"name", axis_name(grid.axis)}, {"values", grid.axis1}};
  j["axis2"] = {{"name", "theta"}, {"values", grid.thetas}};
  j["p00"] = grid.p00;
  j["p11"] = grid.p11;
  j["p01"] = grid.p01;
  j["p10"] = grid.p10;
  return j.dump(2) + "\n";
}

std::string concurrence_csv(const Range& alphas) {
  std::ostringstream out;
  out << "alpha,C\n";
  for (const double a : linspace(alphas))
    out << format_double(a) << ',' << format_double(concurrence_from_alpha(a)) << '\n';
  return out.str();
}

}  // namespace mzsim
