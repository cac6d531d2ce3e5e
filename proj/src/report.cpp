#include "fibra/report.hpp"

#include <sstream>

namespace fibra {

using nlohmann::ordered_json;

void ConstructionReport::stage(const std::string& name, bool ok, const std::string& detail) {
  stages.push_back({name, ok, detail});
}

void ConstructionReport::finalize() {
  pass = true;
  first_failure.clear();
  for (auto& s : stages) {
    if (!s.pass) {
      pass = false;
      if (first_failure.empty()) first_failure = s.name;
    }
  }
  for (auto& c : checks) {
    if (!c.pass) {
      pass = false;
      if (first_failure.empty()) first_failure = "expected:" + c.key;
    }
  }
}

ordered_json ConstructionReport::to_json() const {
  ordered_json j;
  j["schema"] = schema;
  j["id"] = id;
  j["kind"] = kind;
  j["pass"] = pass;
  j["first_failure"] = first_failure;
  ordered_json st = ordered_json::array();
  for (auto& s : stages)
    st.push_back({{"name", s.name}, {"pass", s.pass}, {"detail", s.detail}});
  j["stages"] = st;
  ordered_json ch = ordered_json::array();
  for (auto& c : checks)
    ch.push_back(
        {{"key", c.key}, {"computed", c.computed}, {"expected", c.expected}, {"pass", c.pass}});
  j["checks"] = ch;
  ordered_json vals = ordered_json::object();
  for (auto& [k, v] : values) vals[k] = v;
  j["values"] = vals;
  ordered_json as = ordered_json::array();
  for (auto& a : assertions) as.push_back(a);
  j["assertions"] = as;
  return j;
}

ConstructionReport ConstructionReport::from_json(const ordered_json& j) {
  ConstructionReport r;
  r.schema = j.at("schema").get<std::string>();
  r.id = j.at("id").get<std::string>();
  r.kind = j.at("kind").get<std::string>();
  r.pass = j.at("pass").get<bool>();
  r.first_failure = j.at("first_failure").get<std::string>();
  for (auto& s : j.at("stages"))
    r.stages.push_back({s.at("name").get<std::string>(), s.at("pass").get<bool>(),
                        s.at("detail").get<std::string>()});
  for (auto& c : j.at("checks"))
    r.checks.push_back({c.at("key").get<std::string>(), c.at("computed").get<std::string>(),
                        c.at("expected").get<std::string>(), c.at("pass").get<bool>()});
  for (auto& [k, v] : j.at("values").items()) r.values[k] = v.get<long>();
  for (auto& a : j.at("assertions")) r.assertions.push_back(a.get<std::string>());
  return r;
}

bool ConstructionReport::operator==(const ConstructionReport& o) const {
  return to_json() == o.to_json();
}

std::string ConstructionReport::text_summary() const {
  std::ostringstream os;
  os << "== " << id << " (" << kind << ") : " << (pass ? "PASS" : "FAIL");
  if (!pass) os << " at " << first_failure;
  os << "\n";
  for (auto& s : stages)
    os << "  [" << (s.pass ? "ok" : "FAIL") << "] " << s.name
       << (s.detail.empty() ? "" : ": " + s.detail) << "\n";
  for (auto& c : checks)
    os << "  [" << (c.pass ? "ok" : "FAIL") << "] expected " << c.key << " = " << c.expected
       << ", computed " << c.computed << "\n";
  for (auto& a : assertions) os << "  (asserted, not verified) " << a << "\n";
  return os.str();
}

}  // namespace fibra
