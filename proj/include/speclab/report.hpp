#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace speclab {

using json = nlohmann::ordered_json;

struct CheckResult {
  std::string name;
  std::string theorem_ref;  // stable identity tag, e.g. "sharp-lieb-thirring"
  double value = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string detail;

  bool operator==(const CheckResult&) const = default;
};

struct VerificationReport {
  std::string schema = "speclab-report/1";
  std::string version;
  std::string command;
  std::map<std::string, std::string> parameters;
  std::vector<CheckResult> checks;
  double runtime_seconds = 0.0;
  std::string input_hash;  // FNV-1a over command + sorted parameters

  bool all_pass() const;
  void add(CheckResult c);
  // Recomputes input_hash from command and parameters.
  void seal();

  bool operator==(const VerificationReport&) const = default;
};

extern const char* const kVersion;

std::string fnv1a_hex(const std::string& data);

json to_json(const VerificationReport& r);
VerificationReport report_from_json(const json& j);

std::string serialize(const VerificationReport& r);     // pretty, trailing \n
VerificationReport parse_report(const std::string& s);  // throws on bad schema

}  // namespace speclab
