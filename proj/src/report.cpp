#include "amcheck/report.hpp"

#include <json.hpp>
#include <sstream>

namespace amcheck {

namespace {

nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) {
    nlohmann::json jc;
    jc["id"] = c.id;
    jc["tag"] = c.tag;
    jc["mode"] = c.mode;
    jc["residual"] = c.residual;
    jc["tolerance"] = c.tolerance;
    jc["verdict"] = c.pass ? "pass" : "fail";
    if (!c.detail.empty()) jc["detail"] = c.detail;
    checks.push_back(jc);
  }
  nlohmann::json j;
  j["suite"] = r.suite;
  j["seed"] = r.seed;
  j["version"] = r.version;
  j["samples"] = r.samples;
  j["mesh_level"] = r.mesh_level;
  j["checks"] = checks;
  j["verdict"] = r.pass ? "pass" : "fail";
  return j;
}

std::string markdown(const VerificationReport& r) {
  std::ostringstream os;
  os << "# Verification report: " << r.suite << "\n\n";
  os << "- version: " << r.version << "\n";
  os << "- seed: " << r.seed << "\n";
  os << "- samples: " << r.samples << "\n";
  os << "- mesh level: " << r.mesh_level << "\n";
  os << "- verdict: **" << (r.pass ? "pass" : "fail") << "**\n\n";
  os << "| check | tag | residual | bound | mode | verdict |\n";
  os << "|---|---|---|---|---|---|\n";
  os.setf(std::ios::scientific);
  os.precision(3);
  for (const auto& c : r.checks) {
    os << "| " << c.id << " | " << c.tag << " | " << c.residual << " | " << c.tolerance
       << " | " << (c.mode == "max" ? "<" : ">") << " | "
       << (c.pass ? "pass" : "fail") << " |\n";
  }
  return os.str();
}

}  // namespace

std::string emit_report(const VerificationReport& report, const std::string& format) {
  if (format == "json") return to_json(report).dump(2) + "\n";
  if (format == "md") return markdown(report);
  throw ConfigError("emit_report: unknown format " + format);
}

VerificationReport parse_report_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  VerificationReport r;
  r.suite = j.at("suite").get<std::string>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.version = j.at("version").get<std::string>();
  r.samples = j.at("samples").get<int>();
  r.mesh_level = j.at("mesh_level").get<int>();
  r.pass = j.at("verdict").get<std::string>() == "pass";
  for (const auto& jc : j.at("checks")) {
    CheckResult c;
    c.id = jc.at("id").get<std::string>();
    c.tag = jc.at("tag").get<std::string>();
    c.mode = jc.at("mode").get<std::string>();
    c.residual = jc.at("residual").get<double>();
    c.tolerance = jc.at("tolerance").get<double>();
    c.pass = jc.at("verdict").get<std::string>() == "pass";
    if (jc.contains("detail")) c.detail = jc.at("detail").get<std::string>();
    r.checks.push_back(c);
  }
  return r;
}

}  // namespace amcheck
