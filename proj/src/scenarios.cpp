#include "mzsim/scenarios.hpp"

#include <cmath>
#include <stdexcept>

#include "mzsim/elements.hpp"

namespace mzsim {

namespace {

void check_c(double c) {
  if (!(c >= 0.0 && c <= 1.0)) throw std::domain_error("concurrence out of range [0, 1]");
}

Mat2 arm_matrix(ScenarioKind kind, double theta) {
  ElementSequence seq;
  if (kind == ScenarioKind::p_bs) {
    seq = {make_retarder(theta), bs_5050()};
  } else {
    seq = {bs_5050(), make_retarder(theta), bs_5050()};
  }
  return compose(seq);
}

JointProbabilities probs_from_amps(const JointAmplitudes& a) {
  return JointProbabilities{std::norm(a.a00), std::norm(a.a11), std::norm(a.a01),
                            std::norm(a.a10), {}, {}, {}};
}

}  // namespace

std::pair<JointAmplitudes, JointProbabilities> scenario_numeric(
    ScenarioKind kind, const TwoQuantonState& source, PhasePair phases) {
  const Mat4 evolution =
      kron(arm_matrix(kind, phases.theta_r), arm_matrix(kind, phases.theta_l));
  const Vec4 out = apply(evolution, source.amps);
  // Basis |xy>: x = right-side detector, y = left-side detector.
  const JointAmplitudes amps{out[0], out[3], out[1], out[2]};
  JointProbabilities jp = probs_from_amps(amps);
  jp.kind = kind;
  jp.source_concurrence = concurrence_of_pure_state(source.amps);
  jp.phases = phases;
  return {amps, jp};
}

JointAmplitudes pbs_amplitudes_closed(double c, PhasePair phases) {
  check_c(c);
  const double x = std::sqrt(1.0 - c) / 2.0;
  const double y = std::sqrt(1.0 + c) / 2.0;
  const double tp = phases.plus();
  const double tm = phases.minus();
  return JointAmplitudes{
      x * std::sin(tp) + y * std::cos(tm),
      -x * std::sin(tp) + y * std::cos(tm),
      x * std::cos(tp) + y * std::sin(tm),
      x * std::cos(tp) - y * std::sin(tm),
  };
}

JointProbabilities pbs_probabilities_closed(double c, double theta) {
  check_c(c);
  const double ct = c * std::cos(2.0 * theta);
  const double st = std::sqrt(1.0 - c * c) * std::sin(2.0 * theta);
  JointProbabilities jp{0.25 * (1.0 + ct + st), 0.25 * (1.0 + ct - st),
                        0.25 * (1.0 - ct + st), 0.25 * (1.0 - ct - st),
                        ScenarioKind::p_bs, c, PhasePair{theta, 0.0}};
  return jp;
}

JointAmplitudes bspbs_amplitudes_closed(double c, PhasePair phases) {
  check_c(c);
  const double x = std::sqrt(1.0 - c) / 2.0;
  const double y = std::sqrt(1.0 + c) / 2.0;
  const double hp = phases.plus() / 2.0;
  const double hm = phases.minus() / 2.0;
  return JointAmplitudes{
      x * std::cos(hm) + y * std::sin(hp),
      x * std::cos(hm) - y * std::sin(hp),
      x * std::sin(hm) + y * std::cos(hp),
      -x * std::sin(hm) + y * std::cos(hp),
  };
}

JointProbabilities bspbs_probabilities_closed(double c, double theta) {
  check_c(c);
  const double ct = c * std::cos(theta);
  const double st = std::sqrt(1.0 - c * c) * std::sin(theta);
  JointProbabilities jp{0.25 * (1.0 - ct + st), 0.25 * (1.0 - ct - st),
                        0.25 * (1.0 + ct + st), 0.25 * (1.0 + ct - st),
                        ScenarioKind::bs_p_bs, c, PhasePair{theta, 0.0}};
  return jp;
}

PhasePair phase_convention_map(ScenarioKind kind, double theta) {
  if (kind == ScenarioKind::bs_p_bs) return PhasePair{theta, 0.0};
  return PhasePair{2.0 * theta, 0.0};
}

double fix_phase_for_half(double c, FixedPhaseVariant variant) {
  check_c(c);
  const double root = std::sqrt(1.0 - c * c);
  double s1 = 1.0, s2 = 1.0;
  switch (variant) {
    case FixedPhaseVariant::pp: break;
    case FixedPhaseVariant::pm: s2 = -1.0; break;
    case FixedPhaseVariant::mp: s1 = -1.0; break;
    case FixedPhaseVariant::mm: s1 = -1.0; s2 = -1.0; break;
  }
  // atan2 keeps the c = 0 limit finite where the arctan quotient blows up.
  return 0.5 * std::atan2(s1 * root, s2 * c);
}

std::pair<DetectionPair, DetectionPair> marginals(const JointProbabilities& jp) {
  const DetectionPair right{jp.p00 + jp.p01, jp.p11 + jp.p10};
  const DetectionPair left{jp.p00 + jp.p10, jp.p11 + jp.p01};
  return {right, left};
}

}  // namespace mzsim
