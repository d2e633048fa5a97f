#include "mzsim/two_quanton.hpp"

#include <cmath>
#include <stdexcept>

#include "mzsim/single_quanton.hpp"

namespace mzsim {

TwoQuantonState correlated_pair_state(double alpha) {
  if (!std::isfinite(alpha)) throw std::invalid_argument("alpha must be finite");
  const Vec2 up = input_state(Port::up, alpha).amps;
  const Vec2 down = input_state(Port::down, alpha).amps;
  Vec4 sum = kron(up, down);
  const Vec4 rev = kron(down, up);
  for (std::size_t i = 0; i < 4; ++i) sum[i] += rev[i];
  TwoQuantonState s;
  s.amps = normalized(sum);
  s.alpha = alpha;
  s.concurrence = concurrence_of_pure_state(s.amps);
  return s;
}

double concurrence_from_alpha(double alpha) {
  const double c2 = std::cos(2.0 * alpha);
  const double s2 = std::sin(2.0 * alpha);
  return (s2 * s2) / (1.0 + c2 * c2);
}

double concurrence_of_pure_state(const Vec4& amps) {
  return 2.0 * std::abs(amps[0] * amps[3] - amps[1] * amps[2]);
}

TwoQuantonState state_from_concurrence(double c) {
  if (!(c >= 0.0 && c <= 1.0)) throw std::domain_error("concurrence out of range [0, 1]");
  const double lo = std::sqrt(1.0 - c) / 2.0;
  const double hi = std::sqrt(1.0 + c) / 2.0;
  TwoQuantonState s;
  s.amps[0] = lo;
  s.amps[1] = hi;
  s.amps[2] = hi;
  s.amps[3] = lo;
  s.concurrence = c;
  return s;
}

}  // namespace mzsim
