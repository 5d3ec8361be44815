// qwi: bound states of piecewise-constant 1D potentials from the command line.
//
//   qwi solve profile.json [--method all] [--format json|csv] [--out file]
//   qwi wavefunction profile.json --state 0 [--samples 201] [--method classical|impedance|greens]
//   qwi compare profile.json [--oracle-points 20001]
//
// QWI_LOG=debug|info|warn|error|off sets the stderr log level (default warn).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "qwi/errors.hpp"
#include "qwi/profile_io.hpp"
#include "qwi/report.hpp"

namespace {

void setup_logging() {
  auto logger = spdlog::stderr_color_mt("qwi");
  spdlog::set_default_logger(logger);
  spdlog::set_pattern("qwi: %l: %v");
  spdlog::set_level(spdlog::level::warn);
  if (const char* env = std::getenv("QWI_LOG")) {
    const auto level = spdlog::level::from_str(env);
    if (level == spdlog::level::off && std::string(env) != "off") {
      spdlog::warn("QWI_LOG='{}' not recognised, keeping 'warn'", env);
    } else {
      spdlog::set_level(level);
    }
  }
}

qwi::cli::OutFormat parse_format(const std::string& s) {
  return s == "csv" ? qwi::cli::OutFormat::csv : qwi::cli::OutFormat::json;
}

int emit(const qwi::cli::CommandResult& r, const std::string& out_path) {
  if (!r.diagnostics.empty()) {
    if (r.exit_code == qwi::cli::kExitOk) {
      spdlog::info("{}", r.diagnostics.substr(0, r.diagnostics.size() - 1));
    } else {
      std::cerr << r.diagnostics;
    }
  }
  if (out_path.empty()) {
    std::cout << r.output;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      std::cerr << "cannot write '" << out_path << "'\n";
      return qwi::cli::kExitUsage;
    }
    f << r.output;
    spdlog::info("wrote {}", out_path);
  }
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  setup_logging();

  CLI::App app{"Bound states of piecewise-constant potentials"};
  app.require_subcommand(1);

  std::string profile_path;
  std::string out_path;
  std::string format = "json";
  std::string method;
  int resolution = qwi::kDefaultResolution;
  bool no_meta = false;

  auto* solve = app.add_subcommand("solve", "Find bound-state energies");
  solve->add_option("profile", profile_path, "Profile JSON file")->required();
  solve->add_option("--method", method, "classical | transfer | impedance | all")
      ->default_str("all")
      ->check(CLI::IsMember({"classical", "transfer", "impedance", "all"}));
  solve->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  solve->add_option("--out", out_path, "Write data here instead of stdout");
  solve->add_option("--resolution", resolution, "Bracketing grid size")
      ->check(CLI::Range(2, 1 << 24));
  solve->add_flag("--no-meta", no_meta, "Omit the metadata block");

  int state = 0;
  int samples = 201;
  std::vector<double> eps_schedule;
  auto* wave = app.add_subcommand("wavefunction", "Sample psi and |psi|^2 of one state");
  wave->add_option("profile", profile_path, "Profile JSON file")->required();
  wave->add_option("--state", state, "State index, 0 = ground")->check(CLI::NonNegativeNumber);
  wave->add_option("--samples", samples)->check(CLI::Range(2, 10000000));
  wave->add_option("--method", method, "classical | impedance | greens")
      ->default_str("classical")
      ->check(CLI::IsMember({"classical", "impedance", "greens"}));
  wave->add_option("--eps-schedule", eps_schedule, "Decreasing epsilons for the greens method")
      ->delimiter(',');
  wave->add_option("--out", out_path);
  wave->add_option("--resolution", resolution)->check(CLI::Range(2, 1 << 24));

  std::size_t oracle_points = qwi::oracle::kDefaultPoints;
  auto* cmp = app.add_subcommand("compare", "Cross-check all methods and the grid oracle");
  cmp->add_option("profile", profile_path, "Profile JSON file")->required();
  cmp->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  cmp->add_option("--out", out_path);
  cmp->add_option("--resolution", resolution)->check(CLI::Range(2, 1 << 24));
  cmp->add_option("--oracle-points", oracle_points)->check(CLI::Range(64, 1 << 26));
  cmp->add_flag("--no-meta", no_meta);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : qwi::cli::kExitUsage;
  }

  qwi::ProfileSpec spec;
  try {
    spec = qwi::load_profile(profile_path);
  } catch (const qwi::Error& e) {
    std::cerr << profile_path << ": " << e.what() << "\n";
    return qwi::cli::kExitUsage;
  }
  spdlog::debug("loaded {} regions from {}", spec.profile.region_count(), profile_path);

  if (solve->parsed()) {
    qwi::cli::SolveOptions o;
    if (!method.empty()) o.method = method;
    o.format = parse_format(format);
    o.resolution = resolution;
    o.meta = !no_meta;
    return emit(qwi::cli::solve(spec, o), out_path);
  }
  if (wave->parsed()) {
    qwi::cli::WavefunctionOptions o;
    o.state_index = state;
    o.samples = samples;
    if (!method.empty()) o.method = method;
    o.eps_schedule = eps_schedule;
    o.resolution = resolution;
    return emit(qwi::cli::wavefunction(spec, o), out_path);
  }
  qwi::cli::CompareOptions o;
  o.format = parse_format(format);
  o.resolution = resolution;
  o.oracle_points = oracle_points;
  o.meta = !no_meta;
  return emit(qwi::cli::compare(spec, o), out_path);
}
