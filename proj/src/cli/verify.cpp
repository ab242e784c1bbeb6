#include "fockdarwin/cli/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include <json.hpp>

#include "fockdarwin/classical.hpp"
#include "fockdarwin/coherent.hpp"
#include "fockdarwin/flows.hpp"
#include "fockdarwin/fockalg.hpp"
#include "fockdarwin/numerics.hpp"
#include "fockdarwin/params.hpp"
#include "fockdarwin/spectrum.hpp"

namespace fockdarwin::cli {

namespace {

using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;

std::vector<PhasePoint> random_points(std::mt19937_64& rng, int n, double scale) {
  std::uniform_real_distribution<double> u(-scale, scale);
  std::vector<PhasePoint> pts;
  while (static_cast<int>(pts.size()) < n) {
    PhasePoint p{u(rng), u(rng), u(rng), u(rng)};
    const LadderPoint lp = ladder_from_cartesian(p);
    if (std::abs(lp.alpha_plus) > 0.2 && std::abs(lp.beta_plus) > 0.2) pts.push_back(p);
  }
  return pts;
}

// the three orbit families of the trajectory figure
struct FigureSet {
  RationalRatio ratio;
  MotionSpec spec;
};

std::vector<FigureSet> figure_sets() {
  return {{RationalRatio(2, 1), {10.0, 14.0, 0.0, 0.0, 1.0 / 3.0}},
          {RationalRatio(5, 1), {10.0, 15.0, 2.0, 3.0, 2.0 / 3.0}},
          {RationalRatio(3, 2), {12.0, 12.0, 2.0, 1.0, 1.0 / 5.0}}};
}

Report params_suite() {
  Report r;
  r.suite = "params";
  int bad = 0, total = 0;
  for (int p = 0; p <= 50; ++p) {
    for (int q = 0; p + q <= 50; ++q) {
      if (p + q == 0 || std::gcd(p, q) != 1) continue;
      ++total;
      const RationalRatio ratio(p, q);
      const auto back = rationalize(gamma_of(ratio), 64, 1e-12);
      if (!back || !(*back == ratio)) ++bad;
    }
  }
  r.require("rationalize_round_trip", bad == 0, std::to_string(bad) + " of " + std::to_string(total) + " failed");

  bool bounded = true, monotone = true;
  double prev = -1.0;
  for (int i = 0; i <= 400; ++i) {
    const double B = 0.05 * i;
    const double g = frequencies(B, 1.0, 1.0, 1.0, 1.0).gamma;
    bounded = bounded && std::fabs(g) <= 1.0;
    monotone = monotone && g >= prev;
    prev = g;
  }
  r.require("gamma_bounded", bounded);
  r.require("gamma_monotone_in_B", monotone);

  // bisection for gamma(B) = 1/3
  double lo = 0.0, hi = 10.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (frequencies(mid, 1.0, 1.0, 1.0, 1.0).gamma < 1.0 / 3.0 ? lo : hi) = mid;
  }
  r.add("gamma_one_third_round_trip", std::fabs(frequencies(lo, 1.0, 1.0, 1.0, 1.0).gamma - 1.0 / 3.0), 1e-12);
  return r;
}

Report numerics_suite() {
  Report r;
  r.suite = "numerics";
  double lag = 0.0;
  for (int p = 1; p <= 20; ++p) {
    for (int a : {0, 1, 3}) {
      for (double x : {0.3, 1.7, 4.2}) {
        const double h = 1e-5;
        const double fd = (laguerre(p, a, x + h) - laguerre(p, a, x - h)) / (2.0 * h);
        const double exact = -laguerre(p - 1, a + 1, x);
        lag = std::max(lag, std::fabs(fd - exact) / std::max(1.0, std::fabs(exact)));
      }
    }
  }
  r.add("laguerre_derivative", lag, 1e-6);

  double bes = 0.0;
  for (double x : {0.5, 3.0, 10.0, 14.5, 16.0, 30.0}) {
    const double h = 1e-5 * std::max(1.0, x);
    const double fd = (bessel_i(0, x + h) - bessel_i(0, x - h)) / (2.0 * h);
    bes = std::max(bes, std::fabs(fd - bessel_i(1, x)) / bessel_i(1, x));
  }
  r.add("bessel_I0_prime_eq_I1", bes, 1e-7);

  const Grid2D grid(10.0, 80, 16);
  r.add("quadrature_gaussian",
        std::fabs(grid.integrate([](double rho, double) { return rho * std::exp(-rho * rho); }) - kPi), 1e-8);

  const VectorField ho = [](double, std::span<const double> y, std::span<double> d) {
    d[0] = y[1];
    d[1] = -y[0];
  };
  const OdePath path = integrate_ode(ho, {1.0, 0.0}, {0.0, 2.0 * kPi}, 1e-3);
  r.add("rk4_oscillator_period", std::hypot(path.back()[0] - 1.0, path.back()[1]), 1e-9);
  return r;
}

Report spectrum_suite() {
  Report r;
  r.suite = "spectrum";
  double diff = 0.0;
  int count_bad = 0;
  bool connected = true;
  for (int p = 1; p <= 6; ++p) {
    for (int q = 1; p + q <= 7; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const RationalRatio ratio(p, q);
      const double eps_max = 25.0;
      const auto levels = enumerate_levels(ratio, eps_max);
      const auto key_max = static_cast<std::int64_t>(std::floor((eps_max - 1.0) * (p + q) / 2.0 + 1e-9));
      std::map<std::size_t, int> per_d;
      for (const auto& lvl : levels) {
        per_d[lvl.degeneracy()]++;
        for (const auto& s : lvl.members) diff = std::max(diff, std::fabs(energy(s, gamma_of(ratio)) - lvl.energy.value()));
        for (std::size_t i = 1; i < lvl.members.size(); ++i) {
          const QuantumLabel a = lvl.members[i - 1], b = lvl.members[i];
          connected = connected && b.m == a.m - q && b.n == a.n + p;
        }
      }
      // degeneracy d occupies keys [pq(d-1), pq(d+1)); only complete windows are counted
      for (std::int64_t d = 1; p * q * (d + 1) - 1 <= key_max; ++d) {
        if (per_d[static_cast<std::size_t>(d)] != p * q) ++count_bad;
      }
    }
  }
  r.add("energy_vs_multiplet_energy", diff, 1e-14);
  r.require("pq_multiplets_per_degeneracy", count_bad == 0, std::to_string(count_bad) + " mismatched windows");
  r.require("members_connected_by_S_plus", connected);

  double ladder = 0.0, ang = 0.0;
  for (int m = 0; m <= 4; ++m) {
    for (int n = 0; n <= 4; ++n) {
      for (double rho : {0.4, 1.1, 2.3}) {
        for (double phi : {0.2, 1.9, 4.0}) {
          const WaveJet jet = eigenfunction_jet({m, n}, rho, phi);
          const cplx up = apply_ladder(Ladder::APlus, jet, rho, phi);
          ladder = std::max(ladder, std::abs(up - std::sqrt(m + 1.0) * eigenfunction({m + 1, n}, rho, phi)));
          const cplx up_b = apply_ladder(Ladder::BPlus, jet, rho, phi);
          ladder = std::max(ladder, std::abs(up_b - std::sqrt(n + 1.0) * eigenfunction({m, n + 1}, rho, phi)));
          ang = std::max(ang, std::abs(cplx(0.0, -1.0) * jet.d_phi - double(n - m) * jet.value));
        }
      }
    }
  }
  r.add("ladder_consistency", ladder, 1e-6);
  r.add("angular_momentum", ang, 1e-12);

  const Grid2D grid(12.0, 120, 64);
  double ortho = 0.0;
  const QuantumLabel labels[] = {{0, 0}, {0, 1}, {1, 0}, {2, 3}, {3, 1}};
  for (const auto& a : labels) {
    for (const auto& b : labels) {
      const cplx ip = grid.integrate(
          [&](double rho, double phi) { return std::conj(eigenfunction(a, rho, phi)) * eigenfunction(b, rho, phi); });
      ortho = std::max(ortho, std::abs(ip - (a == b ? 1.0 : 0.0)));
    }
  }
  r.add("orthonormality", ortho, 1e-8);
  return r;
}

Report fockalg_suite() {
  Report r;
  r.suite = "fockalg";
  const RationalRatio ratios[] = {{1, 1}, {1, 0}, {2, 1}, {3, 2}, {5, 1}};
  for (const RationalRatio& ratio : ratios) {
    double first = -1.0, spread = 0.0;
    for (int n_max : {8, 12, 16}) {
      const FockOperatorSet ops = build_ops(ratio, n_max);
      Report alg = verify_algebra(ops, InteriorMask::for_ratio(ratio));
      alg.suite = std::to_string(ratio.p()) + "_" + std::to_string(ratio.q()) + "_n" + std::to_string(n_max);
      r.merge(alg);
      Report fac = verify_factorizations(ops);
      fac.suite = alg.suite;
      r.merge(fac);
      const double worst = alg.worst();
      if (first < 0.0) first = worst;
      spread = std::max(spread, std::fabs(worst - first));
    }
    r.add("n_max_independence_" + std::to_string(ratio.p()) + "_" + std::to_string(ratio.q()), spread, 1e-10);
  }
  return r;
}

Report classical_suite(std::mt19937_64& rng) {
  Report r;
  r.suite = "classical";
  for (const FigureSet& fs : figure_sets()) {
    const std::string tag = std::to_string(fs.ratio.p()) + "_" + std::to_string(fs.ratio.q());
    const double T = common_period(fs.spec, fs.ratio);
    const Trajectory traj = integrate_hamilton(evolve(fs.spec, 0.0), fs.spec.gamma, T, 1e-3, 50);
    double sup = 0.0, h_rk = 0.0;
    const double h0 = fs.spec.energy();
    for (std::size_t i = 0; i < traj.t.size(); ++i) {
      sup = std::max(sup, distance(traj.points[i], evolve(fs.spec, traj.t[i])));
      h_rk = std::max(h_rk, std::fabs(hamiltonian(traj.points[i], fs.spec.gamma) - h0));
    }
    r.add(tag + ".rk4_vs_analytic", sup, 1e-6, "dt=1e-3 over one period");
    r.add(tag + ".rk4_energy_drift", h_rk, 1e-8);

    const ConstantsOfMotion c0 = constants(evolve(fs.spec, 0.0), fs.ratio);
    double dh = 0.0, dl = 0.0, ds = 0.0, veff = 0.0;
    for (int i = 0; i <= 2000; ++i) {
      const double t = T * i / 2000.0;
      const PhasePoint pt = evolve(fs.spec, t);
      const ConstantsOfMotion c = constants(pt, fs.ratio);
      dh = std::max(dh, std::fabs(hamiltonian(pt, fs.spec.gamma) - h0) / h0);
      dl = std::max(dl, std::fabs(c.L - c0.L) / std::max(1.0, h0));
      ds = std::max(ds, std::fabs(std::abs(c.S_plus) - std::abs(c0.S_plus)) / std::abs(c0.S_plus));
      const double rho = pt.rho();
      if (rho > 1e-3 && c.L != 0.0) {
        const double p_rho = (pt.x * pt.px + pt.y * pt.py) / rho;
        veff = std::max(veff, std::fabs(p_rho * p_rho - (2.0 * h0 - v_eff(rho, c.L, fs.spec.gamma))) / h0);
      }
    }
    r.add(tag + ".energy_drift", dh, 1e-10, "relative");
    r.add(tag + ".angular_momentum_drift", dl, 1e-10, "relative to eps");
    r.add(tag + ".abs_S_plus_drift", ds, 1e-10, "relative");
    r.add(tag + ".effective_potential", veff, 1e-9, "relative to eps");

    const OrbitReport orbit = analyze_orbit(fs.spec, fs.ratio);
    r.add(tag + ".closure", orbit.closure_residual, 1e-9);
    r.add(tag + ".phi_period", orbit.phi_period_residual, 1e-8);
    r.require(tag + ".turning_points", orbit.turning_points == 2 * fs.ratio.order(),
              std::to_string(orbit.turning_points) + " counted");
  }

  for (const RationalRatio& ratio : {RationalRatio(1, 1), RationalRatio(2, 1), RationalRatio(3, 2)}) {
    Report b = bracket_algebra_check(ratio, random_points(rng, 20, 1.0));
    b.suite = "poisson_" + std::to_string(ratio.p()) + "_" + std::to_string(ratio.q());
    r.merge(b);
  }

  double ham = 0.0, trip = 0.0;
  for (const PhasePoint& pt : random_points(rng, 200, 2.0)) {
    const LadderPoint lp = ladder_from_cartesian(pt);
    for (double g : {0.0, 1.0 / 3.0, -0.6}) {
      ham = std::max(ham, std::fabs(hamiltonian(pt, g) -
                                    ((1.0 + g) * std::norm(lp.alpha_plus) + (1.0 - g) * std::norm(lp.beta_plus))));
    }
    trip = std::max(trip, distance(cartesian_from_ladder(lp), pt));
  }
  r.add("hamiltonian_ladder_form", ham, 1e-13);
  r.add("ladder_round_trip", trip, 1e-14);
  return r;
}

Report flows_suite(std::mt19937_64& rng) {
  Report r;
  r.suite = "flows";
  const auto pts = random_points(rng, 5, 1.0);
  r.merge(closed_form_checks(RationalRatio(1, 1), pts));
  r.merge(closed_form_checks(RationalRatio(1, 0), pts));

  const RationalRatio a2(2, 1);
  double h_drift = 0.0;
  for (GeneratorKind kind : {GeneratorKind::S1, GeneratorKind::S2}) {
    for (const PhasePoint& pt : random_points(rng, 3, 0.6)) {
      const FlowResult fr = flow_ode({kind, a2}, {0.0, 4.0}, pt, 1e-3, 10);
      if (!fr.halted) h_drift = std::max(h_drift, fr.h_drift);
    }
  }
  r.add("ode_h_drift_2_1", h_drift, 1e-8, "eta in [0, 4]");

  // d L/d eta at eta = 0 under S1 against the bracket {L, S1}
  double l_rate = 0.0;
  for (const PhasePoint& pt : random_points(rng, 3, 1.0)) {
    const Generator g{GeneratorKind::S1, a2};
    const double d = 1e-3;
    const FlowResult fwd = flow_ode(g, {0.0, d}, pt, d / 8.0);
    const FlowResult bwd = flow_ode(g, {0.0, -d}, pt, d / 8.0);
    const auto L = [](const PhasePoint& z) { return z.x * z.py - z.y * z.px; };
    const double measured = (L(fwd.path.back()) - L(bwd.path.back())) / (2.0 * d);
    const PhaseFunction fl = [](const PhasePoint& z) { return cplx(z.x * z.py - z.y * z.px); };
    const PhaseFunction fg = [g](const PhasePoint& z) { return cplx(generator_value(g, z)); };
    l_rate = std::max(l_rate, std::abs(measured - poisson_fd(fl, fg, pt, 1e-4, true)));
  }
  r.add("angular_momentum_rate_S1", l_rate, 1e-5);

  // hyperbolic family against the ODE, eta in [-2, 2]
  const double c1 = 1.0, c2 = 0.5, th2 = kPi / 8.0;
  double a2_err = 0.0;
  for (double end : {2.0, -2.0}) {
    const FlowResult fr = flow_ode({GeneratorKind::S1, a2}, {0.0, end}, flow_a2_closed(0.0, c1, c2, th2), 1e-3, 20);
    for (std::size_t i = 0; i < fr.eta.size(); ++i) {
      a2_err = std::max(a2_err, distance(fr.path[i], flow_a2_closed(fr.eta[i], c1, c2, th2)));
    }
  }
  r.add("a2_closed_vs_ode", a2_err, 1e-6, "c1=1 c2=0.5 theta2=pi/8");

  const A1Result a1 = flow_a1_check(a2, 0.5, 1.0, 0.6, 0.3);
  Report a1r = a1.report;
  r.merge(a1r);
  const A1Result ctrl = flow_a1_check(a2, 0.5, 1.0, 1.4, 0.3);
  r.require("a1_control_detects_violation", !ctrl.applicable && ctrl.rho_drift > 1e-4,
            "rho drift " + std::to_string(ctrl.rho_drift));
  return r;
}

Report coherent_suite() {
  Report r;
  r.suite = "coherent";
  double mass = 0.0;
  for (double u : {0.0, 0.5, 1.0, 2.0, 5.0, 20.0}) {
    const CoherentLabel l{std::polar(0.6 * u, 0.4), std::conj(std::polar(0.4 * u, 0.4))};
    mass = std::max(mass, std::fabs(total_mass(l, Grid2D::for_amplitude(l.u())) - 1.0));
  }
  r.add("normalization", mass, 1e-6, "u in {0, 0.5, 1, 2, 5, 20}");

  const CoherentLabel lab{{1.0, 0.5}, {0.3, -0.2}};
  double ann = 0.0;
  for (double rho : {0.3, 0.9, 1.6, 2.8}) {
    for (double phi : {0.1, 1.3, 3.0, 5.2}) {
      const WaveJet jet = coherent_jet(lab, rho, phi);
      ann = std::max(ann, std::abs(apply_ladder(Ladder::AMinus, jet, rho, phi) - lab.alpha * jet.value));
      ann = std::max(ann, std::abs(apply_ladder(Ladder::BMinus, jet, rho, phi) - lab.beta * jet.value));
    }
  }
  r.add("annihilation_eigenrelation", ann, 1e-9);

  const CoherentLabel small{{1.0, 0.5}, {0.3, 0.0}};
  const FockExpansion fe = fock_expansion(small, 40);
  const FockOperatorSet ops = build_ops(RationalRatio(1, 1), 40);
  const Eigen::VectorXcd v = fe.as_vector();
  const Eigen::VectorXcd da = ops.a_minus.cast<double>() * v - small.alpha * v;
  const Eigen::VectorXcd db = ops.b_minus.cast<double>() * v - small.beta * v;
  double fock = 0.0;
  const InteriorMask mask{1};
  for (int i = 0; i < ops.dim(); ++i) {
    if (mask.contains(ops.label(i), ops.n_max)) fock = std::max({fock, std::abs(da(i)), std::abs(db(i))});
  }
  r.add("fock_eigenrelation", fock, 1e-8, "n_max=40");

  const CoherentLabel mid{{0.7, 0.3}, {-0.4, 0.5}};
  const FockExpansion fm = fock_expansion(mid, 30);
  const cplx factor = fock_to_closed_factor(mid);
  double recon = 0.0;
  for (double rho : {0.4, 1.0, 1.8, 2.6}) {
    for (double phi : {0.0, 1.1, 2.9, 4.4}) {
      recon = std::max(recon, std::abs(fock_reconstruct(fm, rho, phi) - factor * coherent_psi(mid, rho, phi)));
    }
  }
  r.add("fock_vs_closed_form", recon, 1e-6, "measure factor pi^{-1/2} e^{-(|a|^2+|b|^2)/2} e^{-ab}/K");

  for (const FigureSet& fs : figure_sets()) {
    const std::string tag = std::to_string(fs.ratio.p()) + "_" + std::to_string(fs.ratio.q());
    const CoherentLabel l = coherent_label_for(fs.spec);
    const double T = common_period(fs.spec, fs.ratio);
    const EvolvedLabel back = evolve_label(l, fs.spec.gamma, T);
    r.add(tag + ".label_period", std::max(std::abs(back.label.alpha - l.alpha), std::abs(back.label.beta - l.beta)),
          1e-12);
    double track = 0.0;
    for (int i = 0; i <= 50; ++i) {
      const double t = T * i / 50.0;
      const PhasePoint cl = evolve(fs.spec, t);
      track = std::max(track, std::abs(evolve_label(l, fs.spec.gamma, t).label.center() - cplx(cl.x, cl.y)));
    }
    r.add(tag + ".density_center_tracks_orbit", track, 1e-10);
    r.add(tag + ".ehrenfest", ehrenfest_track(fs.spec, T, 25).relative(), 0.02, "relative sup-norm");
  }
  return r;
}

}  // namespace

std::vector<Report> verification_suites(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Report> out;
  out.push_back(params_suite());
  out.push_back(numerics_suite());
  out.push_back(spectrum_suite());
  out.push_back(fockalg_suite());
  out.push_back(classical_suite(rng));
  out.push_back(flows_suite(rng));
  out.push_back(coherent_suite());
  return out;
}

std::string verification_json(const std::vector<Report>& suites, std::uint64_t seed) {
  nlohmann::ordered_json doc;
  doc["seed"] = seed;
  doc["passed"] = std::all_of(suites.begin(), suites.end(), [](const Report& r) { return r.all_passed(); });
  auto& arr = doc["suites"] = nlohmann::ordered_json::array();
  for (const Report& r : suites) arr.push_back(nlohmann::ordered_json::parse(r.to_json(-1)));
  return doc.dump(2);
}

}  // namespace fockdarwin::cli
