#pragma once

#include <string>
#include <string_view>

namespace mzsim {

// Shortest decimal representation that round-trips the exact double.
std::string format_double(double x);

// Fixed 12-significant-digit formatting for human-facing output.
std::string format_probability(double x);

// Parses an angle literal: a decimal number or one of the pi forms
// "pi", "N*pi", "pi/M", "N*pi/M", with an optional leading minus.
// Throws std::invalid_argument on anything else.
double parse_angle(std::string_view text);

}  // namespace mzsim
