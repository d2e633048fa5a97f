#pragma once

#include <utility>

#include "mzsim/linalg.hpp"

namespace mzsim {

enum class Port { up, down };

// Input state of a quanton approaching the splitter at source angle alpha.
// With alpha' = pi/4 - alpha: up = (cos a', sin a'), down = (sin a', cos a').
struct PortAngleState {
  Port port;
  double alpha;
  double alpha_prime;
  Vec2 amps;
};

struct DetectionPair {
  double p_d0;
  double p_d1;
};

PortAngleState input_state(Port port, double alpha);

// Sends the state through a bare 50:50 splitter. The detection pair is
// (1/2, 1/2) for every alpha.
std::pair<Vec2, DetectionPair> bs_output(const PortAngleState& state);

// Transfer matrix of the BS-P-BS chain, equal to
// i e^{i theta/2} [[sin(t/2), cos(t/2)], [cos(t/2), -sin(t/2)]].
Mat2 mz_transfer(double theta);

// Detection probabilities after the full interferometer, computed
// numerically via mz_transfer. Closed forms: port up gives
// (sin^2(t/2 + a'), cos^2(t/2 + a')), port down the cos/sin pair in t/2 - a'.
DetectionPair mz_probabilities(double alpha, double theta, Port port);

}  // namespace mzsim
