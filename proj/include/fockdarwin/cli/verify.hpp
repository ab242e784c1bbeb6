#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fockdarwin/report.hpp"

namespace fockdarwin::cli {

/// Every invariant suite across the modules. Random sample points come from `seed`.
std::vector<Report> verification_suites(std::uint64_t seed);

/// {"seed": ..., "passed": ..., "suites": [...]}
std::string verification_json(const std::vector<Report>& suites, std::uint64_t seed);

}  // namespace fockdarwin::cli
