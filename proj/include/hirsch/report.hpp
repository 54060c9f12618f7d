#pragma once

#include <string>
#include <utility>
#include <vector>

namespace hirsch {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Ordered verification results, printed as "CHECK <name> PASS|FAIL <detail>".
struct Report {
  std::vector<Check> checks;

  void add(std::string name, bool pass, std::string detail = {}) {
    checks.push_back({std::move(name), pass, std::move(detail)});
  }
  void append(const Report& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }

  bool all_pass() const {
    for (const auto& c : checks) {
      if (!c.pass) return false;
    }
    return true;
  }

  std::string to_string() const {
    std::string out;
    for (const auto& c : checks) {
      out += "CHECK " + c.name + (c.pass ? " PASS" : " FAIL");
      if (!c.detail.empty()) out += " " + c.detail;
      out += '\n';
    }
    return out;
  }
};

}  // namespace hirsch
