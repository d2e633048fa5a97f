#include "mzsim/single_quanton.hpp"

#include <cmath>
#include <numbers>

#include "mzsim/elements.hpp"

namespace mzsim {

PortAngleState input_state(Port port, double alpha) {
  const double ap = std::numbers::pi / 4.0 - alpha;
  Vec2 v;
  if (port == Port::up) {
    v[0] = std::cos(ap);
    v[1] = std::sin(ap);
  } else {
    v[0] = std::sin(ap);
    v[1] = std::cos(ap);
  }
  return PortAngleState{port, alpha, ap, v};
}

std::pair<Vec2, DetectionPair> bs_output(const PortAngleState& state) {
  const Vec2 out = apply(bs_5050().unitary, state.amps);
  return {out, DetectionPair{std::norm(out[0]), std::norm(out[1])}};
}

Mat2 mz_transfer(double theta) {
  const ElementSequence seq{bs_5050(), make_retarder(theta), bs_5050()};
  return compose(seq);
}

DetectionPair mz_probabilities(double alpha, double theta, Port port) {
  const Vec2 out = apply(mz_transfer(theta), input_state(port, alpha).amps);
  return DetectionPair{std::norm(out[0]), std::norm(out[1])};
}

}  // namespace mzsim
