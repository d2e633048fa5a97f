#include "mzsim/numformat.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <string>

namespace mzsim {

std::string format_double(double x) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, ptr);
}

std::string format_probability(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

namespace {

double parse_decimal(std::string_view s) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::invalid_argument("invalid number: '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

double parse_angle(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty angle literal");
  double sign = 1.0;
  if (text.front() == '-') {
    sign = -1.0;
    text.remove_prefix(1);
  }

  double numerator = 1.0;
  bool has_pi = false;
  std::string_view rest = text;

  const auto star = rest.find('*');
  if (star != std::string_view::npos) {
    numerator = parse_decimal(rest.substr(0, star));
    rest.remove_prefix(star + 1);
    if (rest.substr(0, 2) != "pi") throw std::invalid_argument("expected 'pi' after '*'");
    has_pi = true;
    rest.remove_prefix(2);
  } else if (rest.substr(0, 2) == "pi") {
    has_pi = true;
    rest.remove_prefix(2);
  }

  if (!has_pi) return sign * parse_decimal(rest);

  double denominator = 1.0;
  if (!rest.empty()) {
    if (rest.front() != '/') throw std::invalid_argument("unexpected text after 'pi'");
    denominator = parse_decimal(rest.substr(1));
    if (denominator == 0.0) throw std::invalid_argument("division by zero in angle literal");
  }
  return sign * numerator * std::numbers::pi / denominator;
}

}  // namespace mzsim
