#pragma once

#include <string>
#include <vector>

namespace dynorb {

struct Check {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct VerificationReport {
  std::vector<Check> checks;

  void add(std::string name, bool ok, std::string detail = {}) {
    checks.push_back({std::move(name), ok, std::move(detail)});
  }
  void append(const VerificationReport& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  }
  bool ok() const {
    for (const auto& c : checks)
      if (!c.ok) return false;
    return !checks.empty();
  }
};

}  // namespace dynorb
