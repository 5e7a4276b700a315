#include "speclab/report.hpp"

#include <cstdint>
#include <cstdio>

namespace speclab {

const char* const kVersion = "1.0.0";

bool VerificationReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

void VerificationReport::add(CheckResult c) { checks.push_back(std::move(c)); }

void VerificationReport::seal() {
  std::string data = command;
  for (const auto& [k, v] : parameters) data += '\n' + k + '=' + v;
  input_hash = fnv1a_hex(data);
  if (version.empty()) version = kVersion;
}

std::string fnv1a_hex(const std::string& data) {
  uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

json to_json(const VerificationReport& r) {
  json j;
  j["schema"] = r.schema;
  j["version"] = r.version;
  j["command"] = r.command;
  j["parameters"] = r.parameters;
  j["checks"] = json::array();
  for (const auto& c : r.checks) {
    json jc;
    jc["name"] = c.name;
    jc["theorem_ref"] = c.theorem_ref;
    jc["value"] = c.value;
    jc["tolerance"] = c.tolerance;
    jc["pass"] = c.pass;
    jc["detail"] = c.detail;
    j["checks"].push_back(std::move(jc));
  }
  j["runtime_seconds"] = r.runtime_seconds;
  j["input_hash"] = r.input_hash;
  return j;
}

VerificationReport report_from_json(const json& j) {
  VerificationReport r;
  r.schema = j.at("schema").get<std::string>();
  if (r.schema != "speclab-report/1")
    throw std::runtime_error("report: unknown schema " + r.schema);
  r.version = j.at("version").get<std::string>();
  r.command = j.at("command").get<std::string>();
  r.parameters = j.at("parameters").get<std::map<std::string, std::string>>();
  for (const auto& jc : j.at("checks")) {
    CheckResult c;
    c.name = jc.at("name").get<std::string>();
    c.theorem_ref = jc.at("theorem_ref").get<std::string>();
    c.value = jc.at("value").get<double>();
    c.tolerance = jc.at("tolerance").get<double>();
    c.pass = jc.at("pass").get<bool>();
    c.detail = jc.at("detail").get<std::string>();
    r.checks.push_back(std::move(c));
  }
  r.runtime_seconds = j.at("runtime_seconds").get<double>();
  r.input_hash = j.at("input_hash").get<std::string>();
  return r;
}

std::string serialize(const VerificationReport& r) {
  return to_json(r).dump(2) + "\n";
}

VerificationReport parse_report(const std::string& s) {
  return report_from_json(json::parse(s));
}

}  // namespace speclab
