#pragma once

#include <optional>

#include "mzsim/linalg.hpp"

namespace mzsim {

// Normalized two-quanton state over the ordered basis |00>, |01>, |10>, |11>
// with the first slot the right-side quanton. The optional fields record
// which parameterization produced the state.
struct TwoQuantonState {
  Vec4 amps;
  std::optional<double> alpha;
  std::optional<double> concurrence;
};

// Momentum-correlated pair state for source angle alpha, built by tensoring
// the two port states and normalizing. Amplitudes are proportional to
// (cos 2a, 1, 1, cos 2a); negative for alpha in (pi/4, pi/2].
TwoQuantonState correlated_pair_state(double alpha);

// C(alpha) = sin^2(2a) / (1 + cos^2(2a)).
double concurrence_from_alpha(double alpha);

// C = 2|ad - bc| for amplitudes (a, b, c, d); expects a normalized state.
double concurrence_of_pure_state(const Vec4& amps);

// Representative state for a given concurrence:
// (sqrt(1-c)/2, sqrt(1+c)/2, sqrt(1+c)/2, sqrt(1-c)/2).
// Throws std::domain_error unless 0 <= c <= 1.
TwoQuantonState state_from_concurrence(double c);

}  // namespace mzsim
