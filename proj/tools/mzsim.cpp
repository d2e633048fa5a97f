#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mzsim/dsl.hpp"
#include "mzsim/numformat.hpp"
#include "mzsim/scenarios.hpp"
#include "mzsim/single_quanton.hpp"
#include "mzsim/sweep.hpp"
#include "mzsim/verify.hpp"

namespace {

using namespace mzsim;

// Exit codes: 0 success, 1 usage error, 2 parse/validation error,
// 3 verification failure.

Range parse_range(const std::string& text) {
  std::istringstream in(text);
  std::string lo, hi, steps;
  if (!std::getline(in, lo, ':') || !std::getline(in, hi, ':') || !std::getline(in, steps)) {
    throw CLI::ValidationError("range", "expected lo:hi:steps, got '" + text + "'");
  }
  Range r;
  try {
    r.lo = parse_angle(lo);
    r.hi = parse_angle(hi);
    r.steps = std::stoi(steps);
  } catch (const std::exception& e) {
    throw CLI::ValidationError("range", e.what());
  }
  return r;
}

double angle_flag(const std::string& text) {
  try {
    return parse_angle(text);
  } catch (const std::exception& e) {
    throw CLI::ValidationError("angle", e.what());
  }
}

ScenarioKind parse_kind(const std::string& text) {
  if (text == "pbs") return ScenarioKind::p_bs;
  if (text == "bspbs") return ScenarioKind::bs_p_bs;
  throw CLI::ValidationError("scenario", "expected 'pbs' or 'bspbs', got '" + text + "'");
}

void write_output(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << content;
  if (!out) throw std::runtime_error("failed writing output file: " + path);
}

void print_joint(const JointAmplitudes& amps, const JointProbabilities& jp) {
  const auto p = [](double x) { return format_probability(x); };
  std::cout << "P(D0,D0') = " << p(jp.p00) << "\n"
            << "P(D1,D1') = " << p(jp.p11) << "\n"
            << "P(D0,D1') = " << p(jp.p01) << "\n"
            << "P(D1,D0') = " << p(jp.p10) << "\n";
  if (jp.source_concurrence)
    std::cout << "concurrence = " << p(*jp.source_concurrence) << "\n";
  const auto [right, left] = marginals(jp);
  std::cout << "right marginals: P(D0)=" << p(right.p_d0) << " P(D1)=" << p(right.p_d1) << "\n"
            << "left marginals:  P(D0)=" << p(left.p_d0) << " P(D1)=" << p(left.p_d1) << "\n";
  (void)amps;
}

int run_verify(int grid, double tol) {
  bool all_pass = true;
  for (const auto& suite : run_verification(grid, tol)) {
    std::cout << (suite.pass ? "PASS" : "FAIL") << "  " << suite.name
              << "  max deviation " << format_double(suite.max_deviation) << " (tol "
              << format_double(suite.tol) << ")";
    if (!suite.pass) std::cout << "  worst at " << suite.worst;
    std::cout << "\n";
    all_pass = all_pass && suite.pass;
  }
  return all_pass ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Phase-retarder interferometer simulator"};
  app.require_subcommand(1);

  // single
  auto* single = app.add_subcommand("single", "Single-quanton Mach-Zehnder probabilities");
  std::string s_alpha = "0", s_theta = "0", s_port = "u";
  single->add_option("--alpha", s_alpha, "source angle (accepts pi forms)");
  single->add_option("--theta", s_theta, "retarder phase");
  single->add_option("--port", s_port, "input port: u or d")->check(CLI::IsMember({"u", "d"}));

  // scenario
  auto* scenario = app.add_subcommand("scenario", "Two-quanton joint-detection probabilities");
  std::string kind_arg;
  std::string sc_alpha, sc_c, sc_tr = "0", sc_tl = "0";
  scenario->add_option("kind", kind_arg, "pbs or bspbs")->required();
  scenario->add_option("--alpha", sc_alpha, "source angle");
  scenario->add_option("--c", sc_c, "source concurrence");
  scenario->add_option("--theta-r", sc_tr, "right retarder phase (physical)");
  scenario->add_option("--theta-l", sc_tl, "left retarder phase (physical)");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Write a parameter grid as CSV or JSON");
  std::string sw_kind = "pbs", sw_alpha_range, sw_c_range, sw_theta_range, sw_out = "-";
  std::string sw_format = "csv", sw_quantity = "probabilities";
  sweep->add_option("kind", sw_kind, "pbs or bspbs");
  sweep->add_option("--alpha-range", sw_alpha_range, "lo:hi:steps over source angle");
  sweep->add_option("--c-range", sw_c_range, "lo:hi:steps over concurrence");
  sweep->add_option("--theta-range", sw_theta_range, "lo:hi:steps over theta");
  sweep->add_option("--out", sw_out, "output path ('-' for stdout)");
  sweep->add_option("--format", sw_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  sweep->add_option("--quantity", sw_quantity, "probabilities or concurrence")
      ->check(CLI::IsMember({"probabilities", "concurrence"}));

  // run
  auto* run = app.add_subcommand("run", "Execute a .mzc circuit file");
  std::string run_path;
  run->add_option("file", run_path, "circuit file")->required();

  // verify
  auto* verify = app.add_subcommand("verify", "Run the closed-form vs oracle suites");
  int v_grid = 101;
  double v_tol = 1e-10;
  verify->add_option("--grid", v_grid, "grid points per axis")->check(CLI::Range(2, 100000));
  verify->add_option("--tol", v_tol, "tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*single) {
      const Port port = s_port == "u" ? Port::up : Port::down;
      const DetectionPair pair =
          mz_probabilities(angle_flag(s_alpha), angle_flag(s_theta), port);
      std::cout << "P(D0)=" << format_probability(pair.p_d0)
                << " P(D1)=" << format_probability(pair.p_d1) << "\n";
      return 0;
    }

    if (*scenario) {
      if (sc_alpha.empty() == sc_c.empty()) {
        std::cerr << "scenario: exactly one of --alpha / --c is required\n";
        return 1;
      }
      const ScenarioKind kind = parse_kind(kind_arg);
      const TwoQuantonState source = !sc_alpha.empty()
                                         ? correlated_pair_state(angle_flag(sc_alpha))
                                         : state_from_concurrence(angle_flag(sc_c));
      const PhasePair phases{angle_flag(sc_tr), angle_flag(sc_tl)};
      const auto [amps, jp] = scenario_numeric(kind, source, phases);
      print_joint(amps, jp);
      return 0;
    }

    if (*sweep) {
      if (sw_quantity == "concurrence") {
        const Range alphas = sw_alpha_range.empty() ? Range{0.0, std::numbers::pi / 2.0, 101}
                                                    : parse_range(sw_alpha_range);
        write_output(sw_out, concurrence_csv(alphas));
        return 0;
      }
      if (!sw_alpha_range.empty() && !sw_c_range.empty()) {
        std::cerr << "sweep: use only one of --alpha-range / --c-range\n";
        return 1;
      }
      const ScenarioKind kind = parse_kind(sw_kind);
      const SweepAxis axis = sw_c_range.empty() ? SweepAxis::alpha : SweepAxis::c;
      const Range axis1 = axis == SweepAxis::alpha
                              ? (sw_alpha_range.empty() ? Range{0.0, std::numbers::pi / 2.0, 101}
                                                        : parse_range(sw_alpha_range))
                              : parse_range(sw_c_range);
      const Range thetas = sw_theta_range.empty() ? Range{0.0, 2.0 * std::numbers::pi, 101}
                                                  : parse_range(sw_theta_range);
      const SweepGrid grid = run_sweep(kind, axis, axis1, thetas);
      write_output(sw_out, sw_format == "csv" ? to_csv(grid) : to_json(grid));
      return 0;
    }

    if (*run) {
      std::ifstream in(run_path, std::ios::binary);
      if (!in) {
        std::cerr << "cannot open circuit file: " << run_path << "\n";
        return 2;
      }
      std::ostringstream buf;
      buf << in.rdbuf();
      const CircuitSpec spec = parse_circuit(buf.str());
      std::cout << render(spec);
      const auto [amps, jp] = compile_and_run(spec);
      print_joint(amps, jp);
      return 0;
    }

    if (*verify) return run_verify(v_grid, v_tol);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    if (!e.snippet().empty()) {
      std::cerr << "  | " << e.snippet() << "\n"
                << "  | " << std::string(std::max(0, e.column() - 1), ' ') << "^\n";
    }
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 2;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
