#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <vector>

#include "mzsim/dsl.hpp"

using namespace mzsim;

namespace {

constexpr double kPi = std::numbers::pi;

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const std::filesystem::path kValidDir = MZSIM_TEST_DATA_DIR "/circuits/valid";
const std::filesystem::path kInvalidDir = MZSIM_TEST_DATA_DIR "/circuits/invalid";

}  // namespace

TEST_CASE("tokenize basics") {
  const auto tokens = tokenize("right = [bs]");
  REQUIRE(tokens.size() == 5);
  CHECK(tokens[0].kind == TokenKind::identifier);
  CHECK(tokens[0].text == "right");
  CHECK(tokens[1].text == "=");
  CHECK(tokens[2].text == "[");
  CHECK(tokens[3].text == "bs");
  CHECK(tokens[4].text == "]");
  CHECK(tokens[0].line == 1);
  CHECK(tokens[0].column == 1);
  CHECK(tokens[3].column == 10);
}

TEST_CASE("tokenize phase call") {
  const auto tokens = tokenize("phase(0.5)");
  REQUIRE(tokens.size() == 4);
  CHECK(tokens[0].text == "phase");
  CHECK(tokens[1].text == "(");
  CHECK(tokens[2].kind == TokenKind::number);
  CHECK(tokens[2].text == "0.5");
  CHECK(tokens[3].text == ")");
}

TEST_CASE("tokenize rejects illegal characters with a location") {
  try {
    tokenize("alpha = @");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 9);
    CHECK(e.snippet() == "alpha = @");
  }
}

TEST_CASE("tokenize skips comments and tracks lines") {
  const auto tokens = tokenize("# comment\nsource { alpha = 1 }\n");
  REQUIRE(!tokens.empty());
  CHECK(tokens[0].text == "source");
  CHECK(tokens[0].line == 2);
}

TEST_CASE("golden file parses field by field") {
  const CircuitSpec spec = parse_circuit(read_file(kValidDir / "bspbs_maxent.mzc"));
  REQUIRE(spec.alpha.has_value());
  CHECK(*spec.alpha == doctest::Approx(kPi / 4.0).epsilon(1e-15));
  CHECK_FALSE(spec.concurrence.has_value());
  REQUIRE(spec.right_arm.size() == 3);
  CHECK(spec.right_arm[0].kind == ElementDesc::Kind::bs);
  CHECK(spec.right_arm[1].kind == ElementDesc::Kind::phase);
  CHECK(spec.right_arm[1].theta == doctest::Approx(kPi / 3.0).epsilon(1e-15));
  CHECK(spec.right_arm[2].kind == ElementDesc::Kind::bs);
  REQUIRE(spec.left_arm.size() == 3);
  CHECK(spec.left_arm[1].theta == 0.0);
  REQUIRE(spec.title.has_value());
  CHECK(*spec.title == "bs-p-bs, maximally entangled source");
}

TEST_CASE("inline parse of a minimal circuit") {
  const CircuitSpec spec =
      parse_circuit("source { alpha = 0 } right = [bs] left = [bs]");
  CHECK(*spec.alpha == 0.0);
  CHECK(spec.right_arm.size() == 1);
  CHECK(spec.left_arm.size() == 1);
  CHECK_FALSE(spec.title.has_value());
}

TEST_CASE("pi literal forms") {
  const CircuitSpec spec = parse_circuit(
      "source { alpha = pi } right = [phase(3*pi/4), bs] left = [phase(-pi/2), bs]");
  CHECK(*spec.alpha == doctest::Approx(kPi).epsilon(1e-15));
  CHECK(spec.right_arm[0].theta == doctest::Approx(3.0 * kPi / 4.0).epsilon(1e-15));
  CHECK(spec.left_arm[0].theta == doctest::Approx(-kPi / 2.0).epsilon(1e-15));
}

TEST_CASE("every valid corpus file parses and round-trips through render") {
  int count = 0;
  for (const auto& entry : std::filesystem::directory_iterator(kValidDir)) {
    const CircuitSpec spec = parse_circuit(read_file(entry.path()));
    const CircuitSpec reparsed = parse_circuit(render(spec));
    CHECK(reparsed == spec);
    ++count;
  }
  CHECK(count >= 6);
}

TEST_CASE("malformed corpus files produce located errors") {
  int parse_errors = 0, validation_errors = 0;
  for (const auto& entry : std::filesystem::directory_iterator(kInvalidDir)) {
    const std::string text = read_file(entry.path());
    try {
      parse_circuit(text);
      FAIL(("expected an error for " + entry.path().filename().string()));
    } catch (const ParseError& e) {
      CHECK(e.line() >= 1);
      CHECK(e.column() >= 1);
      // the snippet must be the actual offending source line
      std::istringstream lines(text);
      std::string line;
      for (int i = 0; i < e.line(); ++i) std::getline(lines, line);
      CHECK(e.snippet() == line);
      ++parse_errors;
    } catch (const ValidationError&) {
      ++validation_errors;
    }
  }
  CHECK(parse_errors >= 2);
  CHECK(validation_errors >= 3);
  CHECK(parse_errors + validation_errors >= 4);
}

TEST_CASE("validation rejects out-of-range concurrence") {
  CHECK_THROWS_WITH_AS(
      parse_circuit("source { concurrence = 1.2 } right = [bs] left = [bs]"),
      doctest::Contains("concurrence out of range"), ValidationError);
}

TEST_CASE("validation rejects two phases in one arm") {
  CHECK_THROWS_AS(
      parse_circuit("source { alpha = 0 } right = [phase(1), phase(2), bs] left = [bs]"),
      ValidationError);
}

TEST_CASE("compile_and_run canonical setups") {
  const auto [a1, p1] = compile_and_run(parse_circuit(
      "source { alpha = pi/4 } right = [phase(0), bs] left = [phase(0), bs]"));
  CHECK(std::abs(p1.p00 - 0.5) < 1e-12);
  CHECK(std::abs(p1.p11 - 0.5) < 1e-12);
  CHECK(std::abs(p1.p01) < 1e-12);
  CHECK(std::abs(p1.p10) < 1e-12);
  CHECK(p1.kind == ScenarioKind::p_bs);

  const auto [a2, p2] = compile_and_run(parse_circuit(
      "source { alpha = pi/4 } right = [bs, phase(0), bs] left = [bs, phase(0), bs]"));
  CHECK(std::abs(p2.p00) < 1e-12);
  CHECK(std::abs(p2.p11) < 1e-12);
  CHECK(std::abs(p2.p01 - 0.5) < 1e-12);
  CHECK(std::abs(p2.p10 - 0.5) < 1e-12);
  CHECK(p2.kind == ScenarioKind::bs_p_bs);

  const auto [a3, p3] = compile_and_run(
      parse_circuit("source { concurrence = 0 } right = [bs] left = [bs]"));
  CHECK(std::abs(p3.p00 - 0.25) < 1e-12);
  CHECK(std::abs(p3.p11 - 0.25) < 1e-12);
  CHECK(std::abs(p3.p01 - 0.25) < 1e-12);
  CHECK(std::abs(p3.p10 - 0.25) < 1e-12);
}

TEST_CASE("compile_and_run matches the scenarios module bit for bit") {
  const auto [da, dp] = compile_and_run(parse_circuit(
      "source { alpha = pi/4 } right = [bs, phase(pi/3), bs] left = [bs, phase(0), bs]"));
  const auto [sa, sp] = scenario_numeric(
      ScenarioKind::bs_p_bs, correlated_pair_state(kPi / 4.0), {kPi / 3.0, 0.0});
  CHECK(dp.p00 == sp.p00);
  CHECK(dp.p11 == sp.p11);
  CHECK(dp.p01 == sp.p01);
  CHECK(dp.p10 == sp.p10);
  CHECK(da.a00 == sa.a00);
  CHECK(da.a11 == sa.a11);
}
