/// @file check.hpp
/// @brief Lightweight pass/fail check lists shared by all verification paths.

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace kinvar {

/// One verified statement. `rule` is a stable slug naming the mathematical
/// fact being checked (used for grouping across suites); `witness` carries
/// failure context or a short summary of what was exercised.
struct Check {
  std::string name;
  std::string rule;
  bool pass = false;
  std::string witness;
};

struct CheckList {
  std::vector<Check> checks;

  void add(std::string name, std::string rule, bool pass, std::string witness = "") {
    checks.push_back({std::move(name), std::move(rule), pass, std::move(witness)});
  }
  void merge(const CheckList& other, const std::string& prefix = "") {
    for (const Check& c : other.checks)
      checks.push_back({prefix.empty() ? c.name : prefix + "/" + c.name, c.rule, c.pass, c.witness});
  }
  bool all_pass() const {
    for (const Check& c : checks)
      if (!c.pass) return false;
    return true;
  }
  size_t failures() const {
    size_t f = 0;
    for (const Check& c : checks)
      if (!c.pass) ++f;
    return f;
  }
};

/// Check list plus the context that produced it.
struct SuiteReport {
  int d = 0;
  int n = 0;
  uint64_t seed = 0;
  CheckList checks;

  bool all_pass() const { return checks.all_pass(); }
};

}  // namespace kinvar
