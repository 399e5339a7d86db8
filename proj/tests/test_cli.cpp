#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "amcheck/report.hpp"
#include "amcheck/suites.hpp"

using namespace amcheck;

namespace {

SuiteConfig small_config(const std::string& suite) {
  SuiteConfig cfg;
  cfg.suite = suite;
  cfg.samples = 25;
  cfg.mesh_level = 3;
  cfg.spins = {1};
  cfg.helicities = {1};
  return cfg;
}

}  // namespace

TEST_CASE("run_suite: massive campaign passes with the pinned tolerances") {
  SuiteConfig cfg = small_config("massive");
  cfg.spins = {1};
  cfg.seed = 42;
  const auto rep = run_suite(cfg);
  CHECK(rep.pass);
  CHECK(rep.suite == "massive");
  for (const auto& c : rep.checks) {
    CHECK(c.pass);
    if (c.mode == "max") CHECK(c.residual < c.tolerance);
    if (c.mode == "min") CHECK(c.residual > c.tolerance);
  }
}

TEST_CASE("run_suite: topology records the Chern integer") {
  const auto rep = run_suite(small_config("topology"));
  CHECK(rep.pass);
  bool found = false;
  for (const auto& c : rep.checks)
    if (c.id == "topology.h1.chern") {
      found = true;
      CHECK(c.tag == "chern-number");
      CHECK(c.detail.find("found -2") != std::string::npos);
    }
  CHECK(found);
}

TEST_CASE("run_suite: splitting certifies the relations and the closure gap") {
  const auto rep = run_suite(small_config("splitting"));
  CHECK(rep.pass);
  double perp_residual = -1.0, rel3 = -1.0;
  for (const auto& c : rep.checks) {
    if (c.id == "splitting.h1.closure.perp") perp_residual = c.residual;
    if (c.id == "splitting.h1.rel.perp_perp") rel3 = c.residual;
  }
  CHECK(rel3 >= 0.0);
  CHECK(rel3 < 1e-8);
  CHECK(perp_residual > 0.1);
}

TEST_CASE("run_suite rejects invalid configurations") {
  CHECK_THROWS_AS(run_suite(small_config("bogus")), ConfigError);
  SuiteConfig cfg = small_config("massive");
  cfg.samples = 5;
  CHECK_THROWS_AS(run_suite(cfg), ConfigError);
  cfg = small_config("massive");
  cfg.tolerance_overrides["nonexistent"] = 1e-3;
  CHECK_THROWS_AS(run_suite(cfg), ConfigError);
  cfg = small_config("massive");
  cfg.tolerance_overrides["so3_massive"] = -1.0;
  CHECK_THROWS_AS(run_suite(cfg), ConfigError);
}

TEST_CASE("emit_report") {
  SUBCASE("empty report is a valid passing document") {
    VerificationReport rep;
    rep.suite = "massive";
    rep.seed = 42;
    rep.version = version_string();
    rep.pass = true;
    const std::string json = emit_report(rep, "json");
    const auto back = parse_report_json(json);
    CHECK(back.pass);
    CHECK(back.checks.empty());
    CHECK(back.suite == "massive");
  }

  SUBCASE("json round trip is byte-identical") {
    const auto rep = run_suite(small_config("gauge"));
    const std::string text = emit_report(rep, "json");
    const auto parsed = parse_report_json(text);
    CHECK(emit_report(parsed, "json") == text);
  }

  SUBCASE("identical configs give byte-identical reports") {
    const SuiteConfig cfg = small_config("splitting");
    const std::string a = emit_report(run_suite(cfg), "json");
    const std::string b = emit_report(run_suite(cfg), "json");
    CHECK(a == b);
  }

  SUBCASE("markdown renders one row per check") {
    const auto rep = run_suite(small_config("gauge"));
    const std::string md = emit_report(rep, "md");
    size_t rows = 0;
    for (size_t pos = md.find("\n| "); pos != std::string::npos;
         pos = md.find("\n| ", pos + 1))
      ++rows;
    CHECK(rows == rep.checks.size() + 1);  // header row included
    for (const auto& c : rep.checks) CHECK(md.find(c.tag) != std::string::npos);
  }

  SUBCASE("the all suite is the concatenation of the registry") {
    SuiteConfig cfg = small_config("all");
    cfg.samples = 15;
    const auto all = run_suite(cfg);
    size_t total = 0;
    for (const auto& name : suite_names()) {
      SuiteConfig sub = cfg;
      sub.suite = name;
      total += run_suite(sub).checks.size();
    }
    CHECK(all.checks.size() == total);
    CHECK(all.pass);
  }
}

TEST_CASE("config file parsing") {
  const std::string path = "amcheck_test_config.tmp";
  {
    std::ofstream f(path);
    f << "# campaign configuration\n";
    f << "suite = splitting\n";
    f << "helicities = 1,-1\n";
    f << "samples = 30\n";
    f << "mesh_level = 3\n";
    f << "seed = 99\n";
    f << "tol.closure_floor = 0.05\n";
    f << "format = md\n";
  }
  SUBCASE("values load and defaults survive") {
    const SuiteConfig cfg = parse_config_file(path, SuiteConfig{});
    CHECK(cfg.suite == "splitting");
    CHECK(cfg.helicities == std::vector<int>{1, -1});
    CHECK(cfg.samples == 30);
    CHECK(cfg.seed == 99);
    CHECK(cfg.format == "md");
    CHECK(cfg.tol("closure_floor") == doctest::Approx(0.05));
    CHECK(cfg.tol("so3_massive") == doctest::Approx(1e-10));
    CHECK(cfg.spins == std::vector<int>{0, 1, 2});  // untouched default
  }
  SUBCASE("unknown keys are config errors") {
    {
      std::ofstream f(path);
      f << "samples = 30\nunknown_key = 1\n";
    }
    CHECK_THROWS_AS(parse_config_file(path, SuiteConfig{}), ConfigError);
  }
  SUBCASE("malformed numbers are config errors") {
    {
      std::ofstream f(path);
      f << "samples = notanumber\n";
    }
    CHECK_THROWS_AS(parse_config_file(path, SuiteConfig{}), ConfigError);
  }
  SUBCASE("missing files are config errors") {
    CHECK_THROWS_AS(parse_config_file("no_such_file.cfg", SuiteConfig{}), ConfigError);
  }
  std::remove(path.c_str());
}
