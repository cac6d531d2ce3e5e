#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace fibra {

struct StageResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CheckResult {
  std::string key;
  std::string computed;
  std::string expected;
  bool pass = false;
};

// The full verification record for one construction. A report is emitted even
// when stages fail; the first failing stage is identified.
struct ConstructionReport {
  std::string schema = "fibra-report/1";
  std::string id;
  std::string kind;
  std::vector<StageResult> stages;
  std::vector<CheckResult> checks;
  std::vector<std::string> assertions;  // echoed, "asserted, not verified"
  std::map<std::string, long> values;
  bool pass = false;
  std::string first_failure;

  void stage(const std::string& name, bool ok, const std::string& detail = "");
  void finalize();

  nlohmann::ordered_json to_json() const;
  static ConstructionReport from_json(const nlohmann::ordered_json& j);
  bool operator==(const ConstructionReport& o) const;
  std::string text_summary() const;
};

}  // namespace fibra
