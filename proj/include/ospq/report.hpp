#pragma once

// Pass/fail bookkeeping shared by every verification routine.

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace ospq {

struct Check {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct Report {
  std::string title;
  std::vector<Check> checks;
  nlohmann::json data = nlohmann::json::object();

  void add(std::string name, bool pass, std::string detail = {}) {
    checks.push_back({std::move(name), pass, std::move(detail)});
  }
  void merge(const Report& other, const std::string& prefix = {}) {
    for (const auto& c : other.checks) checks.push_back({prefix + c.name, c.pass, c.detail});
  }
  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  std::size_t failures() const {
    std::size_t k = 0;
    for (const auto& c : checks) k += c.pass ? 0 : 1;
    return k;
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["title"] = title;
    j["pass"] = pass();
    j["checks"] = nlohmann::json::array();
    for (const auto& c : checks) {
      nlohmann::json e{{"name", c.name}, {"pass", c.pass}};
      if (!c.detail.empty()) e["detail"] = c.detail;
      j["checks"].push_back(std::move(e));
    }
    if (!data.empty()) j["data"] = data;
    return j;
  }
};

}  // namespace ospq
