#include "fockdarwin/report.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

namespace fockdarwin {

Check& Report::add(std::string name, double value, double tolerance, std::string detail) {
  const bool ok = std::isfinite(value) && value < tolerance;
  checks.push_back({std::move(name), value, tolerance, ok, std::move(detail)});
  return checks.back();
}

Check& Report::require(std::string name, bool ok, std::string detail) {
  checks.push_back({std::move(name), ok ? 0.0 : 1.0, 0.5, ok, std::move(detail)});
  return checks.back();
}

void Report::merge(const Report& other) {
  for (Check c : other.checks) {
    if (!other.suite.empty()) c.name = other.suite + "/" + c.name;
    checks.push_back(std::move(c));
  }
}

bool Report::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

double Report::worst(const std::string& prefix) const {
  double w = 0.0;
  for (const Check& c : checks) {
    if (c.name.rfind(prefix, 0) == 0) w = std::max(w, std::isfinite(c.value) ? c.value : INFINITY);
  }
  return w;
}

std::string Report::to_json(int indent) const {
  nlohmann::ordered_json doc;
  doc["suite"] = suite;
  doc["passed"] = all_passed();
  auto& arr = doc["checks"] = nlohmann::ordered_json::array();
  for (const Check& c : checks) {
    nlohmann::ordered_json entry;
    entry["name"] = c.name;
    if (std::isfinite(c.value)) {
      entry["value"] = c.value;
    } else {
      entry["value"] = nullptr;
    }
    entry["tolerance"] = c.tolerance;
    entry["passed"] = c.passed;
    if (!c.detail.empty()) entry["detail"] = c.detail;
    arr.push_back(std::move(entry));
  }
  return doc.dump(indent);
}

}  // namespace fockdarwin
