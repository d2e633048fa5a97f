#include "mzsim/verify.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "mzsim/numformat.hpp"
#include "mzsim/scenarios.hpp"
#include "mzsim/sweep.hpp"

namespace mzsim {

namespace {

struct Tracker {
  double max_dev = 0.0;
  std::string worst;

  void note(double dev, double a, double b, const char* an, const char* bn) {
    if (dev > max_dev) {
      max_dev = dev;
      std::ostringstream w;
      w << an << "=" << format_double(a) << " " << bn << "=" << format_double(b);
      worst = w.str();
    }
  }

  void note(double dev, double a, const char* an) {
    if (dev > max_dev) {
      max_dev = dev;
      worst = std::string(an) + "=" + format_double(a);
    }
  }
};

double quad_dev(const JointProbabilities& a, const JointProbabilities& b) {
  return std::max({std::abs(a.p00 - b.p00), std::abs(a.p11 - b.p11),
                   std::abs(a.p01 - b.p01), std::abs(a.p10 - b.p10)});
}

SuiteResult closed_vs_oracle(ScenarioKind kind, int grid, double tol) {
  Tracker t;
  const auto cs = linspace({0.0, 1.0, grid});
  const auto thetas = linspace({0.0, 2.0 * std::numbers::pi, grid});
  for (const double c : cs) {
    const TwoQuantonState source = state_from_concurrence(c);
    for (const double theta : thetas) {
      const auto [amps, numeric] =
          scenario_numeric(kind, source, phase_convention_map(kind, theta));
      const JointProbabilities closed = kind == ScenarioKind::bs_p_bs
                                            ? bspbs_probabilities_closed(c, theta)
                                            : pbs_probabilities_closed(c, theta);
      t.note(quad_dev(closed, numeric), c, theta, "c", "theta");
    }
  }
  const char* name = kind == ScenarioKind::bs_p_bs ? "closed-vs-oracle bspbs"
                                                   : "closed-vs-oracle pbs";
  return SuiteResult{name, t.max_dev, tol, t.max_dev <= tol, t.worst};
}

SuiteResult normalization(int grid, double tol) {
  Tracker t;
  const auto cs = linspace({0.0, 1.0, grid});
  const auto thetas = linspace({0.0, 2.0 * std::numbers::pi, grid});
  for (const ScenarioKind kind : {ScenarioKind::p_bs, ScenarioKind::bs_p_bs}) {
    for (const double c : cs) {
      const TwoQuantonState source = state_from_concurrence(c);
      for (const double theta : thetas) {
        const auto [amps, jp] =
            scenario_numeric(kind, source, phase_convention_map(kind, theta));
        t.note(std::abs(jp.sum() - 1.0), c, theta, "c", "theta");
      }
    }
  }
  return SuiteResult{"normalization", t.max_dev, tol, t.max_dev <= tol, t.worst};
}

SuiteResult concurrence_round_trip(double tol) {
  Tracker t;
  const auto alphas = linspace({0.0, std::numbers::pi / 4.0, 129});
  for (const double alpha : alphas) {
    const TwoQuantonState direct = correlated_pair_state(alpha);
    const TwoQuantonState rebuilt = state_from_concurrence(concurrence_from_alpha(alpha));
    t.note(max_abs_diff(direct.amps, rebuilt.amps), alpha, "alpha");
  }
  return SuiteResult{"concurrence round trip", t.max_dev, tol, t.max_dev <= tol, t.worst};
}

SuiteResult fixed_phase_family(double tol) {
  Tracker t;
  for (const auto variant : {FixedPhaseVariant::pp, FixedPhaseVariant::pm,
                             FixedPhaseVariant::mp, FixedPhaseVariant::mm}) {
    for (int i = 0; i <= 20; ++i) {
      const double c = i / 20.0;
      const double theta = fix_phase_for_half(c, variant);
      const auto [amps, jp] = scenario_numeric(
          ScenarioKind::p_bs, state_from_concurrence(c),
          phase_convention_map(ScenarioKind::p_bs, theta));
      const double half = 0.5, sq = c * c / 2.0, co = (1.0 - c * c) / 2.0;
      JointProbabilities expected{};
      switch (variant) {
        case FixedPhaseVariant::pp: expected = {half, sq, co, 0.0, {}, {}, {}}; break;
        case FixedPhaseVariant::pm: expected = {co, 0.0, half, sq, {}, {}, {}}; break;
        case FixedPhaseVariant::mp: expected = {sq, half, 0.0, co, {}, {}, {}}; break;
        case FixedPhaseVariant::mm: expected = {0.0, co, sq, half, {}, {}, {}}; break;
      }
      t.note(quad_dev(jp, expected), c, theta, "c", "theta");
    }
  }
  return SuiteResult{"fixed-phase family", t.max_dev, tol, t.max_dev <= tol, t.worst};
}

}  // namespace

std::vector<SuiteResult> run_verification(int grid, double tol) {
  return {
      closed_vs_oracle(ScenarioKind::bs_p_bs, grid, tol),
      closed_vs_oracle(ScenarioKind::p_bs, grid, tol),
      normalization(grid, tol),
      concurrence_round_trip(tol),
      fixed_phase_family(tol),
  };
}

}  // namespace mzsim
