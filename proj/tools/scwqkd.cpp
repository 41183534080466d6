// scwqkd: subcarrier-wave QKD link calculator.
//
// Subcommands sweep the channel loss and emit plot-ready CSV: QBER curves,
// Devetak-Winter secure key rates under the collective beam-splitting
// attack, optimal sideband photon numbers, a Monte Carlo consistency check
// and the two-detector BB84 count-rate comparison.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "scw/cli_ops.hpp"
#include "scw/config.hpp"

namespace {

struct CommonArgs {
  std::string config_path;
  std::string detector;
  std::string protocol;
  std::string mode;
  std::string out;
  std::uint64_t seed = 0;
  bool seed_set = false;
};

void add_common_options(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--config", args.config_path, "configuration file (key = value sections)")
      ->check(CLI::ExistingFile);
  cmd->add_option("--detector", args.detector, "detector preset")
      ->check(CLI::IsMember({"snspd", "apd"}));
  cmd->add_option("--protocol", args.protocol, "protocol")
      ->check(CLI::IsMember({"b92", "bb84-osd"}));
  cmd->add_option("--mode", args.mode, "d-function evaluation mode")
      ->check(CLI::IsMember({"exact", "asymptotic"}));
  cmd->add_option_function<std::uint64_t>(
         "--seed", [&args](std::uint64_t s) { args.seed = s; args.seed_set = true; },
         "Monte Carlo seed");
  cmd->add_option("--out", args.out, "output path (default: stdout, or [run] out)");
}

scw::RunConfig build_config(const CommonArgs& args) {
  scw::RunConfig cfg = args.config_path.empty() ? scw::default_config()
                                                : scw::load_config_file(args.config_path);
  if (!args.detector.empty()) {
    cfg.detector = *scw::detector_by_name(args.detector);
    cfg.detector_name = args.detector;
  }
  if (args.protocol == "b92") cfg.protocol = scw::ProtocolSelection::B92;
  if (args.protocol == "bb84-osd") cfg.protocol = scw::ProtocolSelection::BB84_OSD;
  if (args.mode == "exact") cfg.system.mode = scw::EvalMode::Exact;
  if (args.mode == "asymptotic") cfg.system.mode = scw::EvalMode::Asymptotic;
  if (args.seed_set) cfg.seed = args.seed;
  if (!args.out.empty()) cfg.output = args.out;
  cfg.validate();
  return cfg;
}

void write_output(const scw::RunConfig& cfg, const std::string& payload) {
  if (cfg.output.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream f(cfg.output);
  if (!f) throw std::runtime_error("cannot write output file '" + cfg.output + "'");
  f << payload;
  if (!f.good()) throw std::runtime_error("write failed for '" + cfg.output + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"subcarrier-wave QKD link calculator"};
  app.require_subcommand(1);

  CommonArgs args;
  CLI::App* qber = app.add_subcommand("qber-curve", "QBER vs channel loss (CSV)");
  CLI::App* keyrate =
      app.add_subcommand("keyrate-curve", "secure key rate vs channel loss (CSV)");
  CLI::App* optmu =
      app.add_subcommand("optimal-mu", "rate-maximizing sideband photon number (CSV)");
  CLI::App* validate =
      app.add_subcommand("validate", "Monte Carlo check of the analytic channel");
  CLI::App* compare =
      app.add_subcommand("compare-bb84", "two-detector BB84 vs BB84-OSD count rates");
  for (CLI::App* cmd : {qber, keyrate, optmu, validate, compare})
    add_common_options(cmd, args);

  CLI11_PARSE(app, argc, argv);

  try {
    const scw::RunConfig cfg = build_config(args);
    if (qber->parsed()) {
      write_output(cfg, scw::cli::cmd_qber_curve(cfg));
    } else if (keyrate->parsed()) {
      write_output(cfg, scw::cli::cmd_keyrate_curve(cfg));
    } else if (optmu->parsed()) {
      write_output(cfg, scw::cli::cmd_optimal_mu(cfg));
    } else if (validate->parsed()) {
      const scw::cli::Report r = scw::cli::cmd_validate(cfg);
      std::cout << r.text;
      if (!cfg.output.empty()) write_output(cfg, r.csv);
      if (!r.pass) {
        std::cerr << "error: monte-carlo statistics disagree with the analytic channel "
                     "(|z| >= 3)\n";
        return 1;
      }
    } else if (compare->parsed()) {
      const scw::cli::Report r = scw::cli::cmd_compare_bb84(cfg);
      std::cout << r.text;
      if (!cfg.output.empty()) write_output(cfg, r.csv);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
