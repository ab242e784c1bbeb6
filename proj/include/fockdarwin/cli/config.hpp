#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "fockdarwin/params.hpp"

namespace fockdarwin::cli {

enum class Command { Spectrum, Sweep, Trajectory, Orbit, Flow, Coherent, Verify };

const char* command_name(Command c);
/// Throws UsageError for an unknown name.
Command command_from_name(const std::string& name);

// Bad flag value or combination; `key` names the offending flag.
class UsageError : public std::runtime_error {
 public:
  UsageError(std::string key, const std::string& what)
      : std::runtime_error("--" + key + ": " + what), key_(std::move(key)) {}
  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

struct GammaSpec {
  double gamma = 0.0;
  std::optional<RationalRatio> ratio;  // empty when gamma has no small rational form
};

/// "<decimal>", "g=<decimal>" or "p/q" (the ratio (1+gamma)/(1-gamma)). Decimals go
/// through rationalize with tolerance `tol`.
GammaSpec parse_gamma(const std::string& text, double tol = 1e-9);

struct RunConfig {
  Command command = Command::Verify;

  std::optional<std::string> gamma;  // --gamma
  std::optional<std::string> ratio;  // --ratio

  double alpha0 = 10.0;
  double beta0 = 14.0;
  double theta1 = 0.0;
  double theta2 = 0.0;

  double eps_max = 6.0;
  double t_end = 0.0;  // 0: one common period
  double dt = 0.01;

  std::string generator = "S1";  // S, S1, S2 or A2
  double eta_max = 2.0;
  double deta = 0.5;
  double c1 = 1.0;
  double c2 = 0.5;

  int grid_rho = 96;
  int grid_phi = 128;

  std::string out;  // empty: stdout
  std::uint64_t seed = 20240611;
  double tol = 1e-9;
};

/// Checks flag ranges and the gamma/ratio exclusivity. Throws UsageError.
void validate(const RunConfig& config);

/// Resolves --gamma or --ratio; throws UsageError when neither or both are set.
GammaSpec resolve_gamma(const RunConfig& config);

/// One-line key=value rendering of every field, used as the CSV comment.
std::string describe(const RunConfig& config);

}  // namespace fockdarwin::cli
