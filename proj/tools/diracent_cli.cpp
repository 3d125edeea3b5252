// Copyright 2026 The diracent Authors.
// SPDX-License-Identifier: Apache-2.0

// diracent: grid sweeps of boosted two-particle entanglement, plus the
// acceptance suite.
//
//   diracent sweep --scenario psi2 --omega 0:5:100 --theta 0:1.5708:50 --measures eg,negativity
//   diracent sweep --config run.ini --out results.csv
//   diracent verify [--json]
//
// Exit codes: 0 success, 1 validation or I/O error, 2 acceptance failure.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "diracent/diracent.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitAcceptance = 2;

struct SweepArgs {
  std::string scenario = "psi1";
  double omega0 = 1.0;
  double mass = 1.0;
  std::string omega = "0:5:100";
  std::string theta = "0:1.5707963267948966:50";
  std::string measures = "eg,delta_eg,negativity,delta_negativity";
  std::string format = "csv";
  std::string out;
  std::string chiral;
  std::vector<std::string> terms;
  std::string direction;
  unsigned workers = 0;
};

diracent::SweepConfig to_config(const SweepArgs& a) {
  using namespace diracent;
  SweepConfig cfg;
  cfg.scenario = parse_scenario(a.scenario);
  cfg.omega0 = a.omega0;
  cfg.mass = a.mass;
  cfg.omega_grid = parse_grid("omega", a.omega);
  cfg.theta_grid = parse_grid("theta", a.theta);
  cfg.measures = parse_measures(a.measures);
  if (!a.chiral.empty()) {
    const auto fg = detail::split(a.chiral, ',');
    if (fg.size() != 2) throw ValidationError("chiral", "expected f,g");
    try {
      cfg.chiral_labels = ChiralLabelPair(detail::parse_int("chiral", fg[0]), detail::parse_int("chiral", fg[1]));
    } catch (const DomainError& e) {
      throw ValidationError("chiral", e.what());
    }
  }
  for (const auto& t : a.terms) cfg.custom_terms.push_back(parse_custom_term(t));
  if (!a.direction.empty()) {
    const auto xyz = detail::split(a.direction, ',');
    if (xyz.size() != 3) throw ValidationError("direction", "expected x,y,z");
    cfg.direction = Vec3{detail::parse_real("direction", xyz[0]), detail::parse_real("direction", xyz[1]),
                         detail::parse_real("direction", xyz[2])};
  }
  return cfg;
}

// key=value lines; '#' or ';' starts a comment line. A key fills its option
// only when the command line left it unset; repeated keys accumulate.
void apply_config_file(CLI::App& cmd, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw diracent::ValidationError("config", "cannot read '" + path + "'");
  std::string line;
  int lineno = 0;
  std::vector<std::pair<CLI::Option*, std::string>> pending;
  while (std::getline(in, line)) {
    ++lineno;
    line = diracent::detail::trim(line);
    if (line.empty() || line[0] == '#' || line[0] == ';') continue;
    const auto eq = line.find('=');
    const std::string where = path + ":" + std::to_string(lineno);
    if (eq == std::string::npos) throw diracent::ValidationError("config", where + ": expected key=value");
    std::string key = diracent::detail::trim(line.substr(0, eq));
    std::string value = diracent::detail::trim(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);
    if (key == "config") throw diracent::ValidationError("config", where + ": nested config files are not supported");
    CLI::Option* opt = nullptr;
    try {
      opt = cmd.get_option("--" + key);
    } catch (const CLI::OptionNotFound&) {
      throw diracent::ValidationError("config", where + ": unknown key '" + key + "'");
    }
    if (opt->count() == 0) pending.emplace_back(opt, value);
  }
  for (auto& [opt, value] : pending) opt->add_result(value);
  try {
    for (auto& [opt, value] : pending) opt->run_callback();
  } catch (const CLI::ParseError& e) {
    throw diracent::ValidationError("config", e.what());
  }
}

int run_sweep_command(const SweepArgs& a) {
  const diracent::SweepConfig cfg = to_config(a);
  const diracent::OutputFormat format = diracent::parse_format(a.format);
  const auto rows = diracent::run_sweep(cfg, a.workers);
  if (a.out.empty() || a.out == "-") {
    diracent::emit(rows, cfg.measures, format, std::cout);
    return kExitOk;
  }
  std::ofstream file(a.out, std::ios::binary);
  if (!file) throw diracent::ValidationError("out", "cannot open '" + a.out + "' for writing");
  diracent::emit(rows, cfg.measures, format, file);
  return kExitOk;
}

int run_verify_command(bool json) {
  const diracent::VerifyReport report = diracent::run_verification();
  if (json)
    std::cout << diracent::report_json(report).dump(2) << "\n";
  else
    diracent::print_report(report, std::cout);
  return report.all_passed() ? kExitOk : kExitAcceptance;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lorentz-boosted entanglement of two Dirac particles"};
  app.require_subcommand(1);

  SweepArgs sweep;
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Evaluate measures over an (omega, theta) grid");
  std::string config_file;
  sweep_cmd->add_option("--config", config_file, "key=value file; flags given on the command line win")
      ->check(CLI::ExistingFile);
  sweep_cmd->add_option("--scenario", sweep.scenario, "psi1|psi2|psi3|chiral-psi2|chiral-psi3|custom")
      ->capture_default_str();
  sweep_cmd->add_option("--omega0", sweep.omega0, "initial rapidity of the pair")->capture_default_str();
  sweep_cmd->add_option("--mass", sweep.mass, "particle mass")->capture_default_str();
  sweep_cmd->add_option("--omega", sweep.omega, "boost rapidity grid min:max:steps")->capture_default_str();
  sweep_cmd->add_option("--theta", sweep.theta, "boost angle grid min:max:steps, radians")
      ->capture_default_str();
  sweep_cmd->add_option("--measures", sweep.measures, "eg,delta_eg,negativity,delta_negativity,bloch")
      ->capture_default_str();
  sweep_cmd->add_option("--format", sweep.format, "csv|json")->capture_default_str();
  sweep_cmd->add_option("--out", sweep.out, "output file (default stdout)");
  sweep_cmd->add_option("--chiral", sweep.chiral, "chirality labels f,g (chiral-* default 0,0)");
  sweep_cmd->add_option("--term", sweep.terms, "custom term re,im,sA,omega0A,dirA,sB,omega0B,dirB")
      ->allow_extra_args(false);
  sweep_cmd->add_option("--direction", sweep.direction, "fixed boost direction x,y,z; replaces --theta");
  sweep_cmd->add_option("--workers", sweep.workers, "worker threads, 0 = all cores")->capture_default_str();

  bool verify_json = false;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Run the acceptance checks");
  verify_cmd->add_flag("--json", verify_json, "machine-readable report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (*verify_cmd) return run_verify_command(verify_json);
    if (!config_file.empty()) apply_config_file(*sweep_cmd, config_file);
    return run_sweep_command(sweep);
  } catch (const diracent::ValidationError& e) {
    std::cerr << "invalid configuration: " << e.what() << "\n";
  } catch (const diracent::PipelineError& e) {
    std::cerr << "computation failed " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kExitInvalid;
}
