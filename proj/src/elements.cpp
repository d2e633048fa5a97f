#include "mzsim/elements.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mzsim {

namespace {
constexpr double kSqrtHalf = 0.70710678118654752440;
}

Mat2 PhaseRetarder::matrix() const {
  Mat2 m;
  const cplx phase = std::polar(1.0, theta);
  if (arm == Arm::upper) {
    m(0, 0) = phase;
    m(1, 1) = cplx(1.0, 0.0);
  } else {
    m(0, 0) = cplx(1.0, 0.0);
    m(1, 1) = phase;
  }
  return m;
}

BeamSplitter make_beam_splitter(cplx r0, cplx t0, cplx r1, cplx t1) {
  const double tol = kDefaultTol;
  // Pairwise so the degenerate mirror (|r| = 1, |t| = 0) stays valid.
  if (std::abs(std::abs(r0) - std::abs(r1)) > tol ||
      std::abs(std::abs(t0) - std::abs(t1)) > tol) {
    throw std::invalid_argument("beam splitter: reflection/transmission magnitudes must match");
  }
  if (std::abs(std::norm(r0) + std::norm(t0) - 1.0) > tol ||
      std::abs(std::norm(r1) + std::norm(t1) - 1.0) > tol) {
    throw std::invalid_argument("beam splitter: |r|^2 + |t|^2 must equal 1");
  }
  if (std::abs(std::conj(r0) * t1 + std::conj(t0) * r1) > tol) {
    throw std::invalid_argument("beam splitter: cross term r0* t1 + t0* r1 must vanish");
  }
  BeamSplitter bs{r0, t0, r1, t1, {}};
  bs.unitary(0, 0) = r0;
  bs.unitary(0, 1) = t1;
  bs.unitary(1, 0) = t0;
  bs.unitary(1, 1) = r1;
  return bs;
}

BeamSplitter bs_5050() {
  const cplx r(kSqrtHalf, 0.0);
  const cplx t(0.0, kSqrtHalf);
  return make_beam_splitter(r, t, r, t);
}

PhaseRetarder make_retarder(double theta, Arm arm) {
  if (!std::isfinite(theta)) throw std::invalid_argument("retarder: theta must be finite");
  return PhaseRetarder{theta, arm};
}

Mat2 element_matrix(const Element& e) {
  if (const auto* bs = std::get_if<BeamSplitter>(&e)) return bs->unitary;
  return std::get<PhaseRetarder>(e).matrix();
}

Mat2 compose(std::span<const Element> seq) {
  if (seq.empty()) throw std::invalid_argument("compose: empty element sequence");
  Mat2 m = element_matrix(seq[0]);
  for (std::size_t i = 1; i < seq.size(); ++i) m = element_matrix(seq[i]) * m;
  return m;
}

}  // namespace mzsim
