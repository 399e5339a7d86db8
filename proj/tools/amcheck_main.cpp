#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "amcheck/report.hpp"
#include "amcheck/suites.hpp"

namespace {

int run_verify(const amcheck::SuiteConfig& cfg) {
  const amcheck::VerificationReport report = amcheck::run_suite(cfg);
  const std::string text = amcheck::emit_report(report, cfg.format);
  if (cfg.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(cfg.out);
    if (!out) throw amcheck::ConfigError("cannot open output file: " + cfg.out);
    out << text;
  }
  return report.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"amcheck: angular-momentum operator and helicity-bundle verifier"};
  app.require_subcommand(1);

  std::string suite;
  std::string config_path;
  std::vector<int> spins, helicities;
  int samples = -1, mesh_level = -1;
  std::uint64_t seed = 0;
  bool seed_set = false;
  std::string format, out;

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite,
                     "one of: massive, massless, splitting, topology, gauge, all")
      ->required();
  verify->add_option("--spin", spins, "spin values for the massive suite");
  verify->add_option("--helicity", helicities, "helicity values for massless suites");
  verify->add_option("--samples", samples, "sample points per check");
  verify->add_option("--mesh-level", mesh_level, "icosphere subdivision level");
  verify->add_option_function<std::uint64_t>(
      "--seed", [&](const std::uint64_t& v) { seed = v; seed_set = true; },
      "RNG seed (default 42)");
  verify->add_option("--config", config_path, "flat key = value config file");
  verify->add_option("--format", format, "json or md");
  verify->add_option("--out", out, "write the report to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    amcheck::SuiteConfig cfg;
    if (!config_path.empty()) cfg = amcheck::parse_config_file(config_path, cfg);
    // flags override file values
    cfg.suite = suite;
    if (!spins.empty()) cfg.spins = spins;
    if (!helicities.empty()) cfg.helicities = helicities;
    if (samples >= 0) cfg.samples = samples;
    if (mesh_level >= 0) cfg.mesh_level = mesh_level;
    if (seed_set) cfg.seed = seed;
    if (!format.empty()) cfg.format = format;
    if (!out.empty()) cfg.out = out;
    cfg.validate();
    return run_verify(cfg);
  } catch (const amcheck::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
