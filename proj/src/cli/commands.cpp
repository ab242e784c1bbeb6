#include "fockdarwin/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <memory>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "fockdarwin/classical.hpp"
#include "fockdarwin/cli/csv.hpp"
#include "fockdarwin/cli/verify.hpp"
#include "fockdarwin/coherent.hpp"
#include "fockdarwin/errors.hpp"
#include "fockdarwin/flows.hpp"
#include "fockdarwin/spectrum.hpp"

namespace fockdarwin::cli {

namespace {

using json = nlohmann::ordered_json;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Main dataset sink plus optional side files next to it.
class Sinks {
 public:
  Sinks(const RunConfig& config, std::ostream& fallback) : path_(config.out), fallback_(fallback) {
    if (!path_.empty()) {
      file_ = std::make_unique<std::ofstream>(path_);
      if (!*file_) throw UsageError("out", "cannot open '" + path_ + "' for writing");
    }
  }

  std::ostream& main() { return file_ ? *file_ : fallback_; }

  // nullptr when writing to stdout
  std::unique_ptr<std::ofstream> side(const std::string& suffix) {
    if (path_.empty()) return nullptr;
    auto f = std::make_unique<std::ofstream>(path_ + suffix);
    if (!*f) throw UsageError("out", "cannot open '" + path_ + suffix + "' for writing");
    return f;
  }

  void summary(const json& doc) {
    if (auto f = side(".summary.json")) *f << doc.dump(2) << '\n';
  }

 private:
  std::string path_;
  std::ostream& fallback_;
  std::unique_ptr<std::ofstream> file_;
};

RationalRatio require_ratio(const GammaSpec& g, const char* what) {
  if (!g.ratio) {
    throw NotApplicableError(std::string(what) + " needs a rational gamma; got " + format_number(g.gamma));
  }
  return *g.ratio;
}

MotionSpec motion_spec(const RunConfig& c, double gamma) { return {c.alpha0, c.beta0, c.theta1, c.theta2, gamma}; }

std::string ratio_text(const RationalRatio& r) { return std::to_string(r.p()) + "/" + std::to_string(r.q()); }

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = n == 1 ? a : a + (b - a) * i / (n - 1);
  return v;
}

// time grid 0, dt, ..., t_end with the end point included
std::vector<double> time_grid(double t_end, double dt) {
  const auto steps = std::max<long>(1, std::lround(std::ceil(t_end / dt - 1e-9)));
  std::vector<double> t(steps + 1);
  for (long i = 0; i <= steps; ++i) t[i] = t_end * static_cast<double>(i) / static_cast<double>(steps);
  return t;
}

double motion_period(const RunConfig& c, const MotionSpec& spec, const RationalRatio& ratio) {
  if (c.t_end > 0.0) return c.t_end;
  const double T = common_period(spec, ratio);
  return T > 0.0 ? T : 2.0 * std::numbers::pi;
}

MotionSpec spec_from_point(const PhasePoint& pt, double gamma) {
  const LadderPoint lp = ladder_from_cartesian(pt);
  return {std::abs(lp.alpha_plus), std::abs(lp.beta_plus), std::arg(lp.alpha_plus), std::arg(lp.beta_plus), gamma};
}

int cmd_spectrum(const RunConfig& c, Sinks& sinks) {
  const GammaSpec g = resolve_gamma(c);
  const RationalRatio ratio = require_ratio(g, "spectrum");
  const auto levels = enumerate_levels(ratio, c.eps_max);

  CsvWriter csv(sinks.main(), describe(c), {"key", "energy_num", "energy_den", "energy", "degeneracy", "members"});
  json hist = json::object();
  for (const LevelMultiplet& lvl : levels) {
    std::string members;
    for (const QuantumLabel& s : lvl.members) {
      if (!members.empty()) members += ' ';
      members += std::to_string(s.m) + ":" + std::to_string(s.n);
    }
    csv << static_cast<long long>(lvl.key) << static_cast<long long>(lvl.energy.num)
        << static_cast<long long>(lvl.energy.den) << lvl.energy.value() << static_cast<long long>(lvl.degeneracy())
        << members;
    csv.end_row();
    const std::string d = std::to_string(lvl.degeneracy());
    hist[d] = hist.value(d, 0) + 1;
  }
  json doc;
  doc["command"] = "spectrum";
  doc["ratio"] = ratio_text(ratio);
  doc["gamma"] = g.gamma;
  doc["multiplets"] = levels.size();
  doc["degeneracy_histogram"] = hist;
  sinks.summary(doc);
  return kOk;
}

int cmd_sweep(const RunConfig& c, Sinks& sinks) {
  std::optional<GammaSpec> g;
  if (c.gamma || c.ratio) g = resolve_gamma(c);
  const int box = std::max(1, static_cast<int>(std::floor(c.eps_max)) - 1);

  std::vector<double> gammas = linspace(-1.0, 1.0, 201);
  if (g) gammas.push_back(g->gamma);
  std::sort(gammas.begin(), gammas.end());
  gammas.erase(std::unique(gammas.begin(), gammas.end()), gammas.end());
  const std::vector<double> fields = linspace(0.0, 10.0, 201);

  CsvWriter csv(sinks.main(), describe(c), {"axis", "parameter", "gamma", "m", "n", "energy"});
  for (const auto& [axis, grid, name] : {std::tuple<SweepAxis, const std::vector<double>*, const char*>{SweepAxis::Gamma, &gammas, "gamma"},
                                         std::tuple{SweepAxis::MagneticField, &fields, "B"}}) {
    for (const SweepRow& r : sweep_levels(box, box, *grid, axis)) {
      csv << std::string(name) << r.parameter << r.gamma << r.m << r.n << r.energy;
      csv.end_row();
    }
  }

  json doc;
  doc["command"] = "sweep";
  doc["occupation_box"] = box;
  doc["rows"] = csv.rows();
  if (g && g->ratio && !g->ratio->is_landau()) {
    // members of each multiplet inside the box must share one sweep energy at this gamma
    const auto rows = sweep_levels(box, box, {g->gamma}, SweepAxis::Gamma);
    double spread = 0.0;
    int multiplets = 0;
    for (const LevelMultiplet& lvl : enumerate_levels(*g->ratio, c.eps_max)) {
      std::vector<double> e;
      for (const QuantumLabel& s : lvl.members) {
        if (s.m <= box && s.n <= box) e.push_back(rows[s.m * (box + 1) + s.n].energy);
      }
      if (e.size() < 2) continue;
      ++multiplets;
      const auto [lo, hi] = std::minmax_element(e.begin(), e.end());
      spread = std::max(spread, *hi - *lo);
    }
    doc["crossing_gamma"] = g->gamma;
    doc["crossing_multiplets"] = multiplets;
    doc["crossing_energy_spread"] = spread;
    doc["crossings_consistent"] = spread < 1e-12;
  }
  sinks.summary(doc);
  return kOk;
}

int cmd_trajectory(const RunConfig& c, Sinks& sinks) {
  const GammaSpec g = resolve_gamma(c);
  const RationalRatio ratio = require_ratio(g, "trajectory");
  const MotionSpec spec = motion_spec(c, gamma_of(ratio));
  const double t_end = motion_period(c, spec, ratio);

  const auto rows = sample_trajectory(spec, ratio, t_end, c.dt);
  CsvWriter csv(sinks.main(), describe(c), {"t", "x", "y", "px", "py", "eps", "ell", "abs_S", "arg_S"});
  double rho_min = std::numeric_limits<double>::infinity(), rho_max = 0.0;
  for (const TrajectoryRow& r : rows) {
    csv << r.t << r.pt.x << r.pt.y << r.pt.px << r.pt.py << r.eps << r.ell << r.abs_s << r.arg_s;
    csv.end_row();
    rho_min = std::min(rho_min, r.pt.rho());
    rho_max = std::max(rho_max, r.pt.rho());
  }

  if (auto f = sinks.side(".veff.csv")) {
    CsvWriter veff(*f, describe(c), {"rho", "v_eff", "two_eps"});
    const double lo = std::max(1e-3, 0.5 * rho_min);
    for (double rho : linspace(lo, 1.5 * rho_max + 1e-3, 400)) {
      veff << rho << v_eff(rho, spec.angular_momentum(), spec.gamma) << 2.0 * spec.energy();
      veff.end_row();
    }
  }

  const OrbitReport orbit = analyze_orbit(spec, ratio);
  json doc;
  doc["command"] = "trajectory";
  doc["ratio"] = ratio_text(ratio);
  doc["gamma"] = spec.gamma;
  doc["eps"] = spec.energy();
  doc["ell"] = spec.angular_momentum();
  doc["lobes"] = ratio.order();
  doc["period"] = orbit.period;
  doc["turning_points"] = orbit.turning_points;
  doc["closed"] = orbit.closed;
  doc["closure_residual"] = orbit.closure_residual;
  doc["samples"] = rows.size();
  sinks.summary(doc);
  return kOk;
}

int cmd_orbit(const RunConfig& c, Sinks& sinks) {
  const GammaSpec g = resolve_gamma(c);
  const RationalRatio ratio = require_ratio(g, "orbit");
  const MotionSpec spec = motion_spec(c, gamma_of(ratio));
  const double t_end = motion_period(c, spec, ratio);
  const double eps = spec.energy();
  const double ell = spec.angular_momentum();
  const double phi0 = std::arg(constants(evolve(spec, 0.0), ratio).S_plus);
  const bool landau = ratio.p() == 1 && ratio.q() == 0;

  CsvWriter csv(sinks.main(), describe(c), {"t", "phi", "rho", "rho_closed", "residual"});
  double worst_res = 0.0, worst_closed = 0.0;
  for (double t : time_grid(t_end, c.dt)) {
    const PhasePoint pt = evolve(spec, t);
    const double rho = pt.rho();
    const double phi = pt.phi();
    double res = kNaN, closed = kNaN;
    if (rho > 1e-9) {
      res = std::abs(orbit_residual(pt, ratio, eps, ell, phi0));
      worst_res = std::max(worst_res, res);
      try {
        if (ratio.is_oscillator() && ell != 0.0) {
          closed = orbit_ho(eps, ell, phi0, phi);
        } else if (landau) {
          const auto [a, b] = orbit_landau(eps, ell, phi0, phi);
          closed = std::fabs(a - rho) < std::fabs(b - rho) ? a : b;
        }
      } catch (const std::domain_error&) {
        // sample sits on the edge of the angular support
      }
      if (!std::isnan(closed)) worst_closed = std::max(worst_closed, std::fabs(closed - rho));
    }
    csv << t << phi << rho << closed << res;
    csv.end_row();
  }
  json doc;
  doc["command"] = "orbit";
  doc["ratio"] = ratio_text(ratio);
  doc["eps"] = eps;
  doc["ell"] = ell;
  doc["phi0"] = phi0;
  doc["max_residual"] = worst_res;
  doc["max_closed_form_deviation"] = worst_closed;
  sinks.summary(doc);
  return kOk;
}

int cmd_flow(const RunConfig& c, Sinks& sinks) {
  const GammaSpec g = resolve_gamma(c);
  const RationalRatio ratio = require_ratio(g, "flow");
  const double gamma = gamma_of(ratio);
  const MotionSpec base = motion_spec(c, gamma);
  const PhasePoint p0 = evolve(base, 0.0);
  const bool a2 = c.generator == "A2";
  if (a2 && !(ratio.p() == 2 && ratio.q() == 1)) {
    throw NotApplicableError("flow: the A2 family exists only for ratio 2/1");
  }
  const bool closed_form = ratio.is_oscillator() || (ratio.p() == 1 && ratio.q() == 0);
  Generator gen{GeneratorKind::S1, ratio};
  if (c.generator == "S") gen.kind = GeneratorKind::S;
  if (c.generator == "S2") gen.kind = GeneratorKind::S2;

  const auto n_eta = static_cast<int>(std::floor(c.eta_max / c.deta + 1e-9)) + 1;
  CsvWriter csv(sinks.main(), describe(c), {"eta", "t", "x", "y", "px", "py", "h", "L"});
  json family = json::array();
  for (int k = 0; k < n_eta; ++k) {
    const double eta = k * c.deta;
    PhasePoint start;
    if (a2) {
      start = flow_a2_closed(eta, c.c1, c.c2, c.theta2);
    } else if (closed_form) {
      start = flow_closed(gen, eta, p0);
    } else {
      const FlowResult fr = flow_ode(gen, {0.0, eta}, p0, 1e-3);
      if (fr.halted) throw IntegrationFailure("flow: |alpha|+|beta| grew beyond 1e3 times its start", fr.halt_eta);
      start = fr.path.back();
    }
    const MotionSpec spec = spec_from_point(start, gamma);
    const double t_end = motion_period(c, spec, ratio);
    for (double t : time_grid(t_end, c.dt)) {
      const PhasePoint pt = evolve(spec, t);
      csv << eta << t << pt.x << pt.y << pt.px << pt.py << hamiltonian(pt, gamma) << (pt.x * pt.py - pt.y * pt.px);
      csv.end_row();
    }
    family.push_back({{"eta", eta}, {"h", hamiltonian(start, gamma)}, {"L", spec.angular_momentum()}});
  }
  json doc;
  doc["command"] = "flow";
  doc["ratio"] = ratio_text(ratio);
  doc["generator"] = c.generator;
  doc["family"] = family;
  sinks.summary(doc);
  return kOk;
}

int cmd_coherent(const RunConfig& c, Sinks& sinks) {
  const GammaSpec g = resolve_gamma(c);
  const MotionSpec spec = motion_spec(c, g.ratio ? gamma_of(*g.ratio) : g.gamma);
  const CoherentLabel label = coherent_label_for(spec);
  const Grid2D grid(std::max(8.0, 3.0 * (spec.alpha0 + spec.beta0)), c.grid_rho, c.grid_phi);

  CsvWriter csv(sinks.main(), describe(c), {"rho", "phi", "density"});
  const std::vector<double> dens = density_grid(label, grid);
  std::size_t i = 0;
  for (double rho : grid.rho_nodes()) {
    for (double phi : grid.phi_nodes()) {
      csv << rho << phi << dens[i++];
      csv.end_row();
    }
  }

  json doc;
  doc["command"] = "coherent";
  doc["u"] = label.u();
  doc["phi0"] = label.phi0();
  doc["mass"] = total_mass(label, Grid2D::for_amplitude(label.u()));
  if (auto f = sinks.side(".path.csv")) {
    const double t_end = g.ratio ? motion_period(c, spec, *g.ratio) : (c.t_end > 0.0 ? c.t_end : 2.0 * std::numbers::pi);
    const double step = std::max(c.dt, t_end / 96.0);
    CsvWriter path(*f, describe(c), {"t", "x_classical", "y_classical", "x_mean", "y_mean"});
    double err = 0.0, scale = 0.0;
    for (double t : time_grid(t_end, step)) {
      const auto [xm, ym] = expected_position(evolve_label(label, spec.gamma, t).label);
      const PhasePoint cl = evolve(spec, t);
      path << t << cl.x << cl.y << xm << ym;
      path.end_row();
      err = std::max(err, std::hypot(xm - cl.x, ym - cl.y));
      scale = std::max(scale, std::hypot(cl.x, cl.y));
    }
    doc["ehrenfest_relative_sup"] = scale > 0.0 ? err / scale : err;
  }
  sinks.summary(doc);
  return kOk;
}

int cmd_verify(const RunConfig& c, Sinks& sinks) {
  const auto suites = verification_suites(c.seed);
  sinks.main() << verification_json(suites, c.seed) << '\n';
  const bool ok = std::all_of(suites.begin(), suites.end(), [](const Report& r) { return r.all_passed(); });
  return ok ? kOk : kVerificationFailed;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const char* tag = command_name(config.command);
  try {
    validate(config);
    Sinks sinks(config, out);
    switch (config.command) {
      case Command::Spectrum: return cmd_spectrum(config, sinks);
      case Command::Sweep: return cmd_sweep(config, sinks);
      case Command::Trajectory: return cmd_trajectory(config, sinks);
      case Command::Orbit: return cmd_orbit(config, sinks);
      case Command::Flow: return cmd_flow(config, sinks);
      case Command::Coherent: return cmd_coherent(config, sinks);
      case Command::Verify: return cmd_verify(config, sinks);
    }
  } catch (const UsageError& e) {
    err << "fdsym " << tag << ": usage: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "fdsym " << tag << ": " << e.what() << '\n';
    return kNumerical;
  }
  return kUsage;
}

}  // namespace fockdarwin::cli
