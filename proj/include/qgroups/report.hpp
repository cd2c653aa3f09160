#pragma once

#include <cstddef>
#include <string>
#include <deque>
#include <vector>

#include "json.hpp"

namespace qgroups {

/// Outcome of one named check. Keeps the first counterexample only.
struct CheckResult {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::string witness;

  template <class WitnessFn>
  void record(bool ok, WitnessFn&& witness_fn) {
    ++cases;
    if (!ok && passed) {
      passed = false;
      witness = witness_fn();
    }
  }
  void record(bool ok) {
    record(ok, [] { return std::string(); });
  }
};

struct Report {
  std::string title;
  std::deque<CheckResult> checks;  // stable references across add()
  std::vector<std::string> notes;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }

  CheckResult& add(std::string name) {
    checks.push_back(CheckResult{std::move(name)});
    return checks.back();
  }

  const CheckResult* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }

  std::string to_text() const {
    std::string out = title.empty() ? std::string() : title + "\n";
    for (const auto& c : checks) {
      out += (c.passed ? "  PASS  " : "  FAIL  ") + c.name + " (" + std::to_string(c.cases) +
             " cases)";
      if (!c.passed && !c.witness.empty()) out += "\n        witness: " + c.witness;
      out += "\n";
    }
    for (const auto& n : notes) out += "  note: " + n + "\n";
    out += passed() ? "result: pass\n" : "result: fail\n";
    return out;
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["title"] = title;
    j["passed"] = passed();
    j["checks"] = nlohmann::json::array();
    for (const auto& c : checks) {
      nlohmann::json cj{{"name", c.name}, {"status", c.passed ? "pass" : "fail"}, {"cases", c.cases}};
      if (!c.passed) cj["witness"] = c.witness;
      j["checks"].push_back(cj);
    }
    j["notes"] = notes;
    return j;
  }
};

}  // namespace qgroups
