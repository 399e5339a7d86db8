#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace amcheck {

/// Invalid usage or configuration (maps to exit code 2 in the CLI).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One verification campaign: which suite, which particles, sampling
/// budget and seed, plus optional named tolerance overrides.
struct SuiteConfig {
  std::string suite = "all";
  std::vector<int> spins = {0, 1, 2};
  std::vector<int> helicities = {-2, -1, 1, 2};
  int samples = 100;
  int mesh_level = 4;
  std::uint64_t seed = 42;
  std::map<std::string, double> tolerance_overrides;
  std::string format = "json";
  std::string out;  // empty: stdout

  /// Override if present, registered default otherwise.
  double tol(const std::string& name) const;
  void validate() const;
};

const std::map<std::string, double>& default_tolerances();

/// Parses a flat key-value config file (# comments, key = value, comma
/// lists) on top of the given base config.
SuiteConfig parse_config_file(const std::string& path, const SuiteConfig& base);

/// One certified claim. mode "max": pass iff residual < tolerance;
/// mode "min": pass iff residual > tolerance (non-closure floors and
/// obstruction bounds).
struct CheckResult {
  std::string id;
  std::string tag;
  std::string mode = "max";
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string detail;
};

struct VerificationReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::string version;
  int samples = 0;
  int mesh_level = 0;
  std::vector<CheckResult> checks;
  bool pass = false;
};

std::vector<std::string> suite_names();
std::string version_string();

/// Runs the configured suite (checks execute in parallel, the report is
/// assembled in registry order; deterministic given the seed).
VerificationReport run_suite(const SuiteConfig& config);

}  // namespace amcheck
