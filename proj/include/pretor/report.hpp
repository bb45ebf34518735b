#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace pretor {

struct Violation {
  std::string rule;                     // e.g. "associativity"
  std::string detail;                   // human-readable explanation
  std::vector<std::string> witnesses;   // offending ids, least first
  bool operator==(const Violation&) const = default;
};

// Structured verdict emitted by every checker. Violations are report
// content, not faults; a failing report is a normal result.
struct Report {
  std::string subject;
  bool pass = true;
  std::vector<Violation> violations;
  std::map<std::string, std::int64_t> counters;

  void fail(std::string rule, std::string detail, std::vector<std::string> witnesses = {}) {
    pass = false;
    violations.push_back({std::move(rule), std::move(detail), std::move(witnesses)});
  }

  explicit operator bool() const { return pass; }
};

}  // namespace pretor
