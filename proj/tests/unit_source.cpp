#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mzsim/two_quanton.hpp"

using namespace mzsim;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("correlated_pair_state at the landmark angles") {
  const TwoQuantonState product = correlated_pair_state(0.0);
  for (std::size_t i = 0; i < 4; ++i)
    CHECK(std::abs(product.amps[i] - cplx(0.5, 0.0)) < 1e-12);

  const TwoQuantonState bell = correlated_pair_state(kPi / 4.0);
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(bell.amps[0]) < 1e-12);
  CHECK(std::abs(bell.amps[1] - cplx(s, 0.0)) < 1e-12);
  CHECK(std::abs(bell.amps[2] - cplx(s, 0.0)) < 1e-12);
  CHECK(std::abs(bell.amps[3]) < 1e-12);
}

TEST_CASE("correlated_pair_state at alpha = pi/8") {
  // (cos(pi/4), 1, 1, cos(pi/4)) normalized by sqrt(2 (1 + 1/2)) = sqrt(3)
  const TwoQuantonState s = correlated_pair_state(kPi / 8.0);
  const double n = std::sqrt(3.0);
  CHECK(std::abs(s.amps[0] - cplx(std::cos(kPi / 4.0) / n, 0.0)) < 1e-12);
  CHECK(std::abs(s.amps[1] - cplx(1.0 / n, 0.0)) < 1e-12);
  CHECK(std::abs(s.amps[2] - cplx(1.0 / n, 0.0)) < 1e-12);
  CHECK(std::abs(s.amps[3] - cplx(std::cos(kPi / 4.0) / n, 0.0)) < 1e-12);
  CHECK(std::abs(norm(s.amps) - 1.0) < 1e-12);
}

TEST_CASE("concurrence_from_alpha landmarks") {
  CHECK(concurrence_from_alpha(0.0) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(std::abs(concurrence_from_alpha(kPi / 4.0) - 1.0) < 1e-12);
  CHECK(std::abs(concurrence_from_alpha(kPi / 8.0) - 1.0 / 3.0) < 1e-12);
  // independent route: 2|ad - bc| on the constructed state
  CHECK(std::abs(concurrence_of_pure_state(correlated_pair_state(kPi / 8.0).amps) -
                 1.0 / 3.0) < 1e-12);
}

TEST_CASE("concurrence_of_pure_state point values") {
  Vec4 product;
  product[0] = 1.0;
  CHECK(concurrence_of_pure_state(product) == 0.0);

  Vec4 bell;
  bell[0] = bell[3] = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(concurrence_of_pure_state(bell) - 1.0) < 1e-12);

  Vec4 tilted;
  tilted[0] = 0.6;
  tilted[3] = cplx(0.0, 0.8);
  CHECK(std::abs(concurrence_of_pure_state(tilted) - 0.96) < 1e-12);
}

TEST_CASE("concurrence is invariant under a global phase") {
  const Vec4 base = correlated_pair_state(0.3).amps;
  const double c = concurrence_of_pure_state(base);
  for (const cplx lambda : {cplx(0.0, 1.0), std::polar(1.0, 0.7)}) {
    Vec4 rotated = base;
    for (auto& x : rotated.a) x *= lambda;
    CHECK(std::abs(concurrence_of_pure_state(rotated) - c) < 1e-12);
  }
}

TEST_CASE("state_from_concurrence landmarks and range check") {
  const TwoQuantonState flat = state_from_concurrence(0.0);
  for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(flat.amps[i] - cplx(0.5, 0.0)) < 1e-12);

  const TwoQuantonState bell = state_from_concurrence(1.0);
  CHECK(std::abs(bell.amps[0]) < 1e-12);
  CHECK(std::abs(bell.amps[1] - cplx(1.0 / std::sqrt(2.0), 0.0)) < 1e-12);

  CHECK(max_abs_diff(state_from_concurrence(1.0 / 3.0).amps,
                     correlated_pair_state(kPi / 8.0).amps) < 1e-12);

  CHECK_THROWS_AS(state_from_concurrence(-0.01), std::domain_error);
  CHECK_THROWS_AS(state_from_concurrence(1.01), std::domain_error);
  CHECK_THROWS_AS(state_from_concurrence(std::nan("")), std::domain_error);
}

TEST_CASE("round trip through concurrence on alpha in [0, pi/4]") {
  for (int i = 0; i < 129; ++i) {
    const double alpha = kPi / 4.0 * i / 128.0;
    const Vec4 direct = correlated_pair_state(alpha).amps;
    const Vec4 rebuilt = state_from_concurrence(concurrence_from_alpha(alpha)).amps;
    CHECK(max_abs_diff(direct, rebuilt) < 1e-10);
  }
}

TEST_CASE("concurrence symmetry, periodicity, and range") {
  for (int i = 0; i <= 200; ++i) {
    const double alpha = kPi * i / 200.0;
    const double c = concurrence_from_alpha(alpha);
    CHECK(c >= -1e-15);
    CHECK(c <= 1.0 + 1e-15);
    CHECK(std::abs(concurrence_from_alpha(kPi / 2.0 - alpha) - c) < 1e-12);
    CHECK(std::abs(concurrence_from_alpha(alpha + kPi / 2.0) - c) < 1e-12);
  }
}

TEST_CASE("alpha beyond pi/4 flips the |00>/|11> amplitude signs") {
  const TwoQuantonState s = correlated_pair_state(0.9);  // cos(1.8) < 0
  CHECK(s.amps[0].real() < 0.0);
  CHECK(s.amps[3].real() < 0.0);
  CHECK(s.amps[1].real() > 0.0);
  // concurrence still agrees with the representative state
  CHECK(std::abs(concurrence_of_pure_state(s.amps) - concurrence_from_alpha(0.9)) < 1e-12);
}
