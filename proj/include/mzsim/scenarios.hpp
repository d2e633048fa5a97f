#pragma once

#include <optional>
#include <utility>

#include "mzsim/linalg.hpp"
#include "mzsim/single_quanton.hpp"
#include "mzsim/two_quanton.hpp"

namespace mzsim {

// The two joint-detection experiments: retarder-then-splitter per side,
// or a full Mach-Zehnder per side.
enum class ScenarioKind { p_bs, bs_p_bs };

struct PhasePair {
  double theta_r = 0.0;
  double theta_l = 0.0;

  double plus() const { return theta_r + theta_l; }
  double minus() const { return theta_r - theta_l; }
};

// Amplitudes ordered A(D0,D0'), A(D1,D1'), A(D0,D1'), A(D1,D0').
struct JointAmplitudes {
  cplx a00, a11, a01, a10;
};

// Probabilities in the same ordering, plus provenance metadata.
struct JointProbabilities {
  double p00, p11, p01, p10;
  std::optional<ScenarioKind> kind;
  std::optional<double> source_concurrence;
  std::optional<PhasePair> phases;

  double sum() const { return p00 + p11 + p01 + p10; }
};

// Brute-force tensor evolution: composes each side's element chain
// (p_bs: retarder then splitter; bs_p_bs: splitter, retarder, splitter),
// tensors the sides together, and reads amplitudes in the detector basis.
// This is the oracle path; no closed forms are involved.
std::pair<JointAmplitudes, JointProbabilities> scenario_numeric(
    ScenarioKind kind, const TwoQuantonState& source, PhasePair phases);

// Closed-form amplitudes with full-angle arguments in theta_plus/theta_minus;
// phases here are in the closed-form convention (see phase_convention_map).
JointAmplitudes pbs_amplitudes_closed(double c, PhasePair phases);

// Closed-form probabilities with theta_l = 0:
// (1/4)[1 +- C cos(2t) +- sqrt(1-C^2) sin(2t)].
JointProbabilities pbs_probabilities_closed(double c, double theta);

// Closed-form amplitudes with half-angle arguments.
JointAmplitudes bspbs_amplitudes_closed(double c, PhasePair phases);

// Closed-form probabilities with theta_l = 0:
// (1/4)[1 -+ C cos(t) +- sqrt(1-C^2) sin(t)].
JointProbabilities bspbs_probabilities_closed(double c, double theta);

// Maps a closed-form phase angle to the physical retarder phases driving
// scenario_numeric. The bs_p_bs forms match the diag(e^{i t}, 1) retarder
// directly; the p_bs full-angle forms match only when the physical phase is
// twice the closed-form angle.
PhasePair phase_convention_map(ScenarioKind kind, double theta);

// Sign variants of the phase that pins one joint probability at 1/2:
// theta = (1/2) atan2(s1 sqrt(1-c^2), s2 c) with signs (s1, s2) =
// pp:(+,+) pm:(+,-) mp:(-,+) mm:(-,-). Pinned slots under the p_bs closed
// forms: pp -> p00, pm -> p01, mp -> p11, mm -> p10.
enum class FixedPhaseVariant { pp, pm, mp, mm };

double fix_phase_for_half(double c, FixedPhaseVariant variant);

// Per-side detection pairs obtained by summing the joint quadruple.
std::pair<DetectionPair, DetectionPair> marginals(const JointProbabilities& jp);

}  // namespace mzsim
