#include "fockdarwin/flows.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "fockdarwin/errors.hpp"
#include "fockdarwin/numerics.hpp"

namespace fockdarwin {

using cplx = std::complex<double>;

const char* generator_name(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::S: return "S";
    case GeneratorKind::S1: return "S1";
    case GeneratorKind::S2: return "S2";
  }
  return "?";
}

namespace {

double angular_scale(const RationalRatio& ratio) { return ratio.is_oscillator() ? 0.5 : 1.0; }

bool is_landau_plus(const RationalRatio& r) { return r.p() == 1 && r.q() == 0; }

}  // namespace

double generator_value(const Generator& g, const PhasePoint& pt) {
  const ConstantsOfMotion c = constants(pt, g.ratio);
  switch (g.kind) {
    case GeneratorKind::S: return angular_scale(g.ratio) * c.L;
    case GeneratorKind::S1: return c.S_plus.real();
    case GeneratorKind::S2: return c.S_plus.imag();
  }
  return 0.0;
}

PhasePoint flow_ho(GeneratorKind kind, double eta, const PhasePoint& pt) {
  const double c = std::cos(0.5 * eta);
  const double s = std::sin(0.5 * eta);
  switch (kind) {
    case GeneratorKind::S1:
      return {pt.x * c + pt.px * s, pt.y * c - pt.py * s, pt.px * c - pt.x * s, pt.py * c + pt.y * s};
    case GeneratorKind::S2:
      return {pt.x * c + pt.py * s, pt.y * c + pt.px * s, pt.px * c - pt.y * s, pt.py * c - pt.x * s};
    case GeneratorKind::S:
      return {pt.x * c - pt.y * s, pt.y * c + pt.x * s, pt.px * c - pt.py * s, pt.py * c + pt.px * s};
  }
  return pt;
}

PhasePoint flow_landau(GeneratorKind kind, double eta, const PhasePoint& pt) {
  switch (kind) {
    case GeneratorKind::S1: return {pt.x, pt.y + 0.5 * eta, pt.px - 0.5 * eta, pt.py};
    case GeneratorKind::S2: return {pt.x - 0.5 * eta, pt.y, pt.px, pt.py - 0.5 * eta};
    case GeneratorKind::S: {
      const double c = std::cos(eta);
      const double s = std::sin(eta);
      return {pt.x * c - pt.y * s, pt.y * c + pt.x * s, pt.px * c - pt.py * s, pt.py * c + pt.px * s};
    }
  }
  return pt;
}

PhasePoint flow_closed(const Generator& g, double eta, const PhasePoint& pt) {
  if (g.ratio.is_oscillator()) return flow_ho(g.kind, eta, pt);
  if (is_landau_plus(g.ratio)) return flow_landau(g.kind, eta, pt);
  throw NotApplicableError("flow_closed: closed forms exist only for ratios 1/1 and 1/0");
}

namespace {

// d alpha+/d eta, d beta+/d eta for the three generators
void flow_rhs(const Generator& g, cplx a, cplx b, cplx& da, cplx& db) {
  using namespace std::complex_literals;
  const int p = g.ratio.p();
  const int q = g.ratio.q();
  switch (g.kind) {
    case GeneratorKind::S: {
      const double s = angular_scale(g.ratio);
      da = -1i * s * a;
      db = 1i * s * b;
      return;
    }
    case GeneratorKind::S1:
    case GeneratorKind::S2: {
      // A = (q/2) (a-)^{q-1} (b+)^p,  B = (p/2) (a+)^q (b-)^{p-1}
      const cplx A = q == 0 ? cplx(0.0) : 0.5 * q * std::pow(std::conj(a), q - 1) * std::pow(b, p);
      const cplx B = p == 0 ? cplx(0.0) : 0.5 * p * std::pow(a, q) * std::pow(std::conj(b), p - 1);
      if (g.kind == GeneratorKind::S1) {
        da = 1i * A;
        db = 1i * B;
      } else {
        da = A;
        db = -B;
      }
      return;
    }
  }
}

}  // namespace

FlowResult flow_ode(const Generator& g, std::pair<double, double> eta_span, const PhasePoint& pt, double d_eta,
                    int sample_every) {
  if (!(d_eta > 0.0)) throw DomainError("flow_ode: d_eta must be positive");
  const LadderPoint start = ladder_from_cartesian(pt);
  const double size0 = std::abs(start.alpha_plus) + std::abs(start.beta_plus);
  const double limit = 1e3 * std::max(size0, std::numeric_limits<double>::min());

  const VectorField f = [&g](double, std::span<const double> y, std::span<double> dy) {
    cplx da, db;
    flow_rhs(g, {y[0], y[1]}, {y[2], y[3]}, da, db);
    dy[0] = da.real();
    dy[1] = da.imag();
    dy[2] = db.real();
    dy[3] = db.imag();
  };
  OdeOptions opts;
  opts.sample_every = sample_every;
  opts.stop = [limit](double, std::span<const double> y) {
    return std::hypot(y[0], y[1]) + std::hypot(y[2], y[3]) > limit;
  };

  const std::vector<double> y0{start.alpha_plus.real(), start.alpha_plus.imag(), start.beta_plus.real(),
                               start.beta_plus.imag()};
  const OdePath path = integrate_ode(f, y0, eta_span, d_eta, opts);

  const double gamma = gamma_of(g.ratio);
  const double h0 = hamiltonian(pt, gamma);
  const double g0 = generator_value(g, pt);
  FlowResult out;
  out.eta = path.t;
  out.path.reserve(path.y.size());
  for (const auto& y : path.y) {
    const PhasePoint z = cartesian_from_ladder({cplx(y[0], y[1]), cplx(y[2], y[3])});
    out.h_drift = std::max(out.h_drift, std::fabs(hamiltonian(z, gamma) - h0));
    out.generator_drift = std::max(out.generator_drift, std::fabs(generator_value(g, z) - g0));
    out.path.push_back(z);
  }
  out.halted = path.halted;
  if (path.halted) out.halt_eta = path.t.back();
  return out;
}

LadderPoint flow_a2_ladder(double eta, double c1, double c2, double theta2) {
  if (!(c1 > 0.0)) throw DomainError("flow_a2_closed: c1 must be positive");
  const double k = std::sqrt(0.5 * c1);
  const double s = k * eta + c2;
  const double rho1 = k * std::tanh(s);
  const double rho2 = std::sqrt(c1) / std::cosh(s);
  const double theta1 = 2.0 * theta2 + 0.5 * std::numbers::pi;
  return {std::polar(1.0, theta1) * rho1, std::polar(1.0, theta2) * rho2};
}

PhasePoint flow_a2_closed(double eta, double c1, double c2, double theta2) {
  return cartesian_from_ladder(flow_a2_ladder(eta, c1, c2, theta2));
}

A1Result flow_a1_check(const RationalRatio& ratio, double rho1, double rho2, double phi1, double phi2,
                       double eta_max, double d_eta) {
  const int p = ratio.p();
  const int q = ratio.q();
  if (p == 0 || q == 0) throw NotApplicableError("flow_a1_check: needs p, q >= 1");
  if (!(rho1 > 0.0 && rho2 > 0.0)) throw DomainError("flow_a1_check: radii must be positive");

  A1Result res;
  res.report.suite = "flow_a1";
  const double two_pi = 2.0 * std::numbers::pi;
  const double phase = std::remainder(q * phi1 - p * phi2, two_pi);
  const double ratio_err = std::fabs(rho1 / rho2 - static_cast<double>(q) / p);
  res.applicable = ratio_err < 1e-12 && std::fabs(phase) < 1e-12;
  res.report.require("precondition", res.applicable,
                     "rho1/rho2 - q/p = " + std::to_string(ratio_err) + ", q phi1 - p phi2 = " + std::to_string(phase));

  res.predicted1 = 0.5 * q * std::pow(rho1, q - 2) * std::pow(rho2, p);
  res.predicted2 = 0.5 * p * std::pow(rho1, q) * std::pow(rho2, p - 2);

  const Generator g{GeneratorKind::S1, ratio};
  const LadderPoint lp{std::polar(rho1, phi1), std::polar(rho2, phi2)};
  const FlowResult flow = flow_ode(g, {0.0, eta_max}, cartesian_from_ladder(lp), d_eta);

  double unwrap1 = 0.0, unwrap2 = 0.0;
  LadderPoint prev = lp;
  for (const PhasePoint& z : flow.path) {
    const LadderPoint cur = ladder_from_cartesian(z);
    res.rho_drift = std::max({res.rho_drift, std::fabs(std::abs(cur.alpha_plus) - rho1),
                              std::fabs(std::abs(cur.beta_plus) - rho2)});
    unwrap1 += std::arg(cur.alpha_plus / prev.alpha_plus);
    unwrap2 += std::arg(cur.beta_plus / prev.beta_plus);
    prev = cur;
  }
  const double span = flow.eta.back() - flow.eta.front();
  res.rate1 = unwrap1 / span;
  res.rate2 = unwrap2 / span;

  res.report.add("rho_drift", res.rho_drift, 1e-8);
  res.report.add("theta1_rate", std::fabs(res.rate1 - res.predicted1), 1e-6,
                 "measured " + std::to_string(res.rate1) + " predicted " + std::to_string(res.predicted1));
  res.report.add("theta2_rate", std::fabs(res.rate2 - res.predicted2), 1e-6,
                 "measured " + std::to_string(res.rate2) + " predicted " + std::to_string(res.predicted2));
  return res;
}

Report closed_form_checks(const RationalRatio& ratio, std::span<const PhasePoint> points) {
  const bool ho = ratio.is_oscillator();
  if (!ho && !is_landau_plus(ratio)) throw NotApplicableError("closed_form_checks: only ratios 1/1 and 1/0");
  const double gamma = gamma_of(ratio);
  const std::string tag = ho ? "ho" : "landau";

  Report report;
  report.suite = "flows_" + tag;
  using Coord = double PhasePoint::*;
  const Coord coords[4] = {&PhasePoint::x, &PhasePoint::y, &PhasePoint::px, &PhasePoint::py};
  const GeneratorKind kinds[3] = {GeneratorKind::S, GeneratorKind::S1, GeneratorKind::S2};

  for (GeneratorKind kind : kinds) {
    const Generator g{kind, ratio};
    const PhaseFunction gen = [g](const PhasePoint& z) { return cplx(generator_value(g, z)); };
    double deriv = 0.0, group = 0.0, h_inv = 0.0, ode = 0.0;
    for (const PhasePoint& pt : points) {
      const double d = 1e-6;
      const PhasePoint fwd = flow_closed(g, d, pt);
      const PhasePoint bwd = flow_closed(g, -d, pt);
      for (Coord c : coords) {
        const PhaseFunction u = [c](const PhasePoint& z) { return cplx(z.*c); };
        const double measured = (fwd.*c - bwd.*c) / (2.0 * d);
        deriv = std::max(deriv, std::abs(measured - poisson_fd(u, gen, pt)));
      }
      const double e1 = 0.7, e2 = -1.9;
      group = std::max(group, distance(flow_closed(g, e1, flow_closed(g, e2, pt)), flow_closed(g, e1 + e2, pt)));
      for (double eta : {0.3, 1.0, 2.5, 6.0}) {
        h_inv = std::max(h_inv, std::fabs(hamiltonian(flow_closed(g, eta, pt), gamma) - hamiltonian(pt, gamma)));
      }
      const FlowResult flow = flow_ode(g, {0.0, 2.0 * std::numbers::pi}, pt, 1e-3, 100);
      for (std::size_t i = 0; i < flow.eta.size(); ++i) {
        ode = std::max(ode, distance(flow.path[i], flow_closed(g, flow.eta[i], pt)));
      }
    }
    const std::string name = generator_name(kind);
    report.add(tag + "." + name + ".generator_derivative", deriv, 1e-5);
    report.add(tag + "." + name + ".group_composition", group, 1e-12);
    report.add(tag + "." + name + ".h_invariance", h_inv, 1e-12);
    report.add(tag + "." + name + ".ode_vs_closed", ode, 1e-7, "eta in [0, 2pi], d_eta = 1e-3");
  }

  // {S, S1} = S2, {S, S2} = -S1, {S1, S2} = S (oscillator) or -1/2 (Landau)
  const Generator gs{GeneratorKind::S, ratio}, g1{GeneratorKind::S1, ratio}, g2{GeneratorKind::S2, ratio};
  const PhaseFunction fs = [gs](const PhasePoint& z) { return cplx(generator_value(gs, z)); };
  const PhaseFunction f1 = [g1](const PhasePoint& z) { return cplx(generator_value(g1, z)); };
  const PhaseFunction f2 = [g2](const PhasePoint& z) { return cplx(generator_value(g2, z)); };
  double c01 = 0.0, c02 = 0.0, c12 = 0.0;
  for (const PhasePoint& pt : points) {
    c01 = std::max(c01, std::abs(poisson_fd(fs, f1, pt, 1e-4, true) - f2(pt)));
    c02 = std::max(c02, std::abs(poisson_fd(fs, f2, pt, 1e-4, true) + f1(pt)));
    const cplx rhs = ho ? fs(pt) : cplx(-0.5);
    c12 = std::max(c12, std::abs(poisson_fd(f1, f2, pt, 1e-4, true) - rhs));
  }
  report.add(tag + ".bracket_S_S1", c01, 1e-6);
  report.add(tag + ".bracket_S_S2", c02, 1e-6);
  report.add(tag + ".bracket_S1_S2", c12, 1e-6);

  if (!ho) {
    // a rotation with trigonometric argument eta/2 would not be generated by L
    double half = 0.0;
    const PhaseFunction gen = fs;
    for (const PhasePoint& pt : points) {
      const double d = 1e-6;
      const PhasePoint fwd = flow_ho(GeneratorKind::S, d, pt);
      const PhasePoint bwd = flow_ho(GeneratorKind::S, -d, pt);
      for (Coord c : coords) {
        const PhaseFunction u = [c](const PhasePoint& z) { return cplx(z.*c); };
        half = std::max(half, std::abs((fwd.*c - bwd.*c) / (2.0 * d) - poisson_fd(u, gen, pt)));
      }
    }
    report.add("info.landau_S_half_angle_mismatch", half, std::numeric_limits<double>::max(),
               "rotation by eta/2 vs generator L; the implemented flow rotates by eta");
  }
  return report;
}

}  // namespace fockdarwin
