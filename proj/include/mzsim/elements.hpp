#pragma once

#include <span>
#include <stdexcept>
#include <variant>
#include <vector>

#include "mzsim/linalg.hpp"

namespace mzsim {

// Which arm of the interferometer a retarder sits in. The upper arm is
// basis slot 0; the canonical setups all use the upper arm.
enum class Arm { upper, lower };

// Lossless two-port beam splitter, matrix laid out as [[r0, t1], [t0, r1]].
struct BeamSplitter {
  cplx r0, t0, r1, t1;
  Mat2 unitary;
};

struct PhaseRetarder {
  double theta = 0.0;
  Arm arm = Arm::upper;

  Mat2 matrix() const;
};

using Element = std::variant<BeamSplitter, PhaseRetarder>;
using ElementSequence = std::vector<Element>;

// Validates the splitter constraints: equal magnitudes, |r|^2+|t|^2 = 1,
// and the cross term r0* t1 + t0* r1 = 0. Throws std::invalid_argument
// naming the first failed condition.
BeamSplitter make_beam_splitter(cplx r0, cplx t0, cplx r1, cplx t1);

// The canonical 50:50 splitter (1/sqrt2)[[1, i], [i, 1]].
BeamSplitter bs_5050();

PhaseRetarder make_retarder(double theta, Arm arm = Arm::upper);

Mat2 element_matrix(const Element& e);

// Product of element matrices in application order: for a sequence
// e1, e2, e3 the result is M(e3) * M(e2) * M(e1). Throws on empty input.
Mat2 compose(std::span<const Element> seq);

}  // namespace mzsim
