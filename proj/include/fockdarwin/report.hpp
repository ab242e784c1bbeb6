#pragma once

#include <string>
#include <vector>

namespace fockdarwin {

// One named numerical check: a measured residual against its threshold.
struct Check {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string detail;
};

// Ordered collection of checks, serializable as JSON.
struct Report {
  std::string suite;
  std::vector<Check> checks;

  // Records value < tolerance as a pass. NaN fails.
  Check& add(std::string name, double value, double tolerance, std::string detail = {});
  // Records a boolean outcome.
  Check& require(std::string name, bool ok, std::string detail = {});
  void merge(const Report& other);

  bool all_passed() const;
  double worst(const std::string& prefix = {}) const;
  std::string to_json(int indent = 2) const;
};

}  // namespace fockdarwin
