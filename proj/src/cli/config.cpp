#include "fockdarwin/cli/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>

namespace fockdarwin::cli {

namespace {

constexpr const char* kNames[] = {"spectrum", "sweep", "trajectory", "orbit", "flow", "coherent", "verify"};

double parse_decimal(const std::string& text, const std::string& key) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  if (!text.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || text.empty()) throw UsageError(key, "malformed number '" + text + "'");
  return v;
}

int parse_int(const std::string& text, const std::string& key) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw UsageError(key, "malformed integer '" + text + "'");
  }
  return v;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

const char* command_name(Command c) { return kNames[static_cast<int>(c)]; }

Command command_from_name(const std::string& name) {
  for (int i = 0; i < 7; ++i) {
    if (name == kNames[i]) return static_cast<Command>(i);
  }
  throw UsageError("command", "unknown subcommand '" + name + "'");
}

GammaSpec parse_gamma(const std::string& text, double tol) {
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    const int p = parse_int(text.substr(0, slash), "gamma");
    const int q = parse_int(text.substr(slash + 1), "gamma");
    if (p < 0 || q < 0) throw UsageError("gamma", "p/q must be nonnegative");
    if (p == 0 && q == 0) throw UsageError("gamma", "p = q = 0 is not a ratio");
    const int g = std::gcd(p, q);
    RationalRatio r(p / g, q / g);
    return {gamma_of(r), r};
  }
  const std::string body = text.rfind("g=", 0) == 0 ? text.substr(2) : text;
  const double gamma = parse_decimal(body, "gamma");
  if (!(std::fabs(gamma) <= 1.0)) throw UsageError("gamma", "gamma must lie in [-1, 1]");
  return {gamma, rationalize(gamma, 64, tol)};
}

void validate(const RunConfig& c) {
  if (c.gamma && c.ratio) throw UsageError("ratio", "give either --gamma or --ratio, not both");
  if (c.ratio && c.ratio->find('/') == std::string::npos) throw UsageError("ratio", "expected p/q");
  if (c.alpha0 < 0.0) throw UsageError("alpha0", "must be nonnegative");
  if (c.beta0 < 0.0) throw UsageError("beta0", "must be nonnegative");
  if (!(c.eps_max > 1.0)) throw UsageError("eps-max", "must exceed 1");
  if (c.t_end < 0.0) throw UsageError("t-end", "must be nonnegative");
  if (!(c.dt > 0.0)) throw UsageError("dt", "must be positive");
  if (!(c.eta_max >= 0.0)) throw UsageError("eta-max", "must be nonnegative");
  if (!(c.deta > 0.0)) throw UsageError("deta", "must be positive");
  if (!(c.c1 > 0.0)) throw UsageError("c1", "must be positive");
  if (c.grid_rho < 1) throw UsageError("grid-rho", "must be positive");
  if (c.grid_phi < 1) throw UsageError("grid-phi", "must be positive");
  if (!(c.tol > 0.0)) throw UsageError("tol", "must be positive");
  if (c.generator != "S" && c.generator != "S1" && c.generator != "S2" && c.generator != "A2") {
    throw UsageError("generator", "expected S, S1, S2 or A2");
  }
}

GammaSpec resolve_gamma(const RunConfig& c) {
  if (c.gamma && c.ratio) throw UsageError("ratio", "give either --gamma or --ratio, not both");
  if (c.ratio) return parse_gamma(*c.ratio, c.tol);
  if (c.gamma) return parse_gamma(*c.gamma, c.tol);
  throw UsageError("gamma", std::string(command_name(c.command)) + " needs --gamma or --ratio");
}

std::string describe(const RunConfig& c) {
  std::ostringstream os;
  os << "command=" << command_name(c.command) << " gamma=" << c.gamma.value_or("") << " ratio=" << c.ratio.value_or("")
     << " alpha0=" << fmt(c.alpha0) << " beta0=" << fmt(c.beta0) << " theta1=" << fmt(c.theta1)
     << " theta2=" << fmt(c.theta2) << " eps_max=" << fmt(c.eps_max) << " t_end=" << fmt(c.t_end)
     << " dt=" << fmt(c.dt) << " generator=" << c.generator << " eta_max=" << fmt(c.eta_max)
     << " deta=" << fmt(c.deta) << " c1=" << fmt(c.c1) << " c2=" << fmt(c.c2) << " grid_rho=" << c.grid_rho
     << " grid_phi=" << c.grid_phi << " seed=" << c.seed << " tol=" << fmt(c.tol);
  return os.str();
}

}  // namespace fockdarwin::cli
