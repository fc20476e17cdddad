// nrb: numerical radius, radius bounds and polynomial zero bounds from the
// command line.
//
// Exit codes: 0 success, 1 verify found a violation, 2 unreadable or
// malformed input, 3 numerical failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nrb/bounds.hpp"
#include "nrb/io.hpp"
#include "nrb/numrange.hpp"
#include "nrb/polyzero.hpp"
#include "nrb/report.hpp"
#include "nrb/verify.hpp"

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitParse = 2;
constexpr int kExitNumeric = 3;

struct FormatFlags {
  bool json = false;
  bool csv = false;
  bool md = false;

  void attach(CLI::App* cmd) {
    auto* j = cmd->add_flag("--json", json, "JSON output (17 significant digits)");
    auto* c = cmd->add_flag("--csv", csv, "CSV output (17 significant digits)");
    auto* m = cmd->add_flag("--md", md, "Markdown table output");
    j->excludes(c)->excludes(m);
    c->excludes(m);
  }

  nrb::report::Format format() const {
    if (json) return nrb::report::Format::json;
    if (csv) return nrb::report::Format::csv;
    if (md) return nrb::report::Format::markdown;
    return nrb::report::Format::table;
  }
};

// --tol, else NRB_TOL, else the command's default.
double resolve_tol(const std::optional<double>& flag, double fallback) {
  if (flag) return *flag;
  if (const char* env = std::getenv("NRB_TOL")) {
    try {
      std::size_t used = 0;
      const double v = std::stod(env, &used);
      if (used != std::string(env).size() || !(v > 0)) throw std::invalid_argument(env);
      return v;
    } catch (const std::exception&) {
      throw nrb::ParseError(std::string("NRB_TOL is not a positive number: '") + env + "'");
    }
  }
  return fallback;
}

template <typename Body>
int run_stage(const std::string& command, Body&& body) {
  try {
    return body();
  } catch (const nrb::ParseError& e) {
    std::cerr << "nrb " << command << ": parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const nrb::DomainError& e) {
    std::cerr << "nrb " << command << ": invalid input: " << e.what() << "\n";
    return kExitParse;
  } catch (const nrb::DimensionMismatch& e) {
    std::cerr << "nrb " << command << ": invalid input: " << e.what() << "\n";
    return kExitParse;
  } catch (const nrb::NumericalError& e) {
    std::cerr << "nrb " << command << ": numerical failure: " << e.what() << "\n";
    return kExitNumeric;
  }
}

nrb::io::Matrix load(const std::string& path) { return nrb::io::read_matrix_file(path); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical radius bounds and polynomial zero estimates"};
  app.require_subcommand(1);

  std::string matrix_path;
  std::optional<double> tol_flag;
  FormatFlags format;

  auto* radius = app.add_subcommand("radius", "Numerical radius, Crawford number and operator norm of a matrix");
  radius->add_option("matrix", matrix_path, "Matrix document (JSON)")->required();
  radius->add_option("--tol", tol_flag, "Absolute accuracy of the radius sweep");
  format.attach(radius);

  std::vector<double> r_values;
  auto* bounds = app.add_subcommand("bounds", "Evaluate every numerical-radius upper bound");
  bounds->add_option("matrix", matrix_path, "Matrix document (JSON)")->required();
  bounds->add_option("--r", r_values, "Exponent(s) r >= 1; repeat or comma-separate (default 1)")->delimiter(',');
  bounds->add_option("--tol", tol_flag, "Absolute accuracy of the radius sweeps");
  format.attach(bounds);

  std::string coefficients;
  auto* polyzero = app.add_subcommand("polyzero", "Bounds on the zeros of a monic polynomial");
  polyzero->add_option("coefficients", coefficients, "Coefficients from the leading 1 down, e.g. \"1, 2, 0, i, 0, -i\"")
      ->required();
  polyzero->add_option("--tol", tol_flag, "Root-finder tolerance");
  format.attach(polyzero);

  int points = 360;
  std::string out_path;
  auto* range = app.add_subcommand("range", "Boundary points of the numerical range as CSV");
  range->add_option("matrix", matrix_path, "Matrix document (JSON)")->required();
  range->add_option("--points", points, "Number of boundary points (>= 3)");
  range->add_option("--out", out_path, "Output file (default: stdout)");

  nrb::verify::VerifyConfig vconfig;
  auto* verify = app.add_subcommand("verify", "Randomized check of every implemented inequality");
  verify->add_option("--trials", vconfig.trials, "Number of random matrices");
  verify->add_option("--dim-min", vconfig.dim_min, "Smallest matrix order");
  verify->add_option("--dim-max", vconfig.dim_max, "Largest matrix order");
  verify->add_option("--seed", vconfig.seed, "64-bit seed");
  verify->add_option("--tol", tol_flag, "Slack tolerance of the checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  if (radius->parsed()) {
    return run_stage("radius", [&] {
      const auto t = load(matrix_path);
      const double tol = resolve_tol(tol_flag, nrb::kDefaultRadiusTol);
      const auto w = nrb::numerical_radius(t, tol);
      const nrb::report::RadiusRecord rec{w.value, nrb::crawford_number(t, tol).value, nrb::operator_norm(t),
                                          w.theta_star};
      std::cout << nrb::report::render_radius(rec, format.format());
      return 0;
    });
  }
  if (bounds->parsed()) {
    return run_stage("bounds", [&] {
      const auto t = load(matrix_path);
      nrb::ReportConfig<double> config;
      config.tol = resolve_tol(tol_flag, nrb::kDefaultRadiusTol);
      if (!r_values.empty()) config.r_values = r_values;
      std::cout << nrb::report::render_bounds(nrb::evaluate_all(t, config), format.format());
      return 0;
    });
  }
  if (polyzero->parsed()) {
    return run_stage("polyzero", [&] {
      const auto p = nrb::io::parse_coefficients(coefficients);
      const double tol = resolve_tol(tol_flag, nrb::kDefaultTol);
      std::cout << nrb::report::render_zero_table(nrb::compare_bounds(p, tol), format.format());
      return 0;
    });
  }
  if (range->parsed()) {
    return run_stage("range", [&] {
      const auto t = load(matrix_path);
      const std::string csv = nrb::report::render_range_csv(nrb::range_boundary(t, points));
      if (out_path.empty()) {
        std::cout << csv;
      } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out || !(out << csv)) throw nrb::ParseError("cannot write '" + out_path + "'");
      }
      return 0;
    });
  }
  return run_stage("verify", [&] {
    vconfig.tol = resolve_tol(tol_flag, vconfig.tol);
    const auto outcome = nrb::verify::run_verify(vconfig, std::cout);
    return outcome.ok() ? 0 : kExitViolation;
  });
}
