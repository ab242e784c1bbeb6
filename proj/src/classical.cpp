#include "fockdarwin/classical.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "fockdarwin/errors.hpp"
#include "fockdarwin/numerics.hpp"

namespace fockdarwin {

using cplx = std::complex<double>;

LadderPoint ladder_from_cartesian(const PhasePoint& pt) {
  return {cplx(0.5 * (pt.x - pt.py), -0.5 * (pt.px + pt.y)), cplx(0.5 * (pt.x + pt.py), 0.5 * (pt.y - pt.px))};
}

PhasePoint cartesian_from_ladder(const LadderPoint& lp) {
  const double ar = lp.alpha_plus.real(), ai = lp.alpha_plus.imag();
  const double br = lp.beta_plus.real(), bi = lp.beta_plus.imag();
  return {ar + br, bi - ai, -ai - bi, br - ar};
}

double hamiltonian(const PhasePoint& pt, double gamma) {
  return 0.5 * (pt.px * pt.px + pt.py * pt.py + pt.x * pt.x + pt.y * pt.y) - gamma * (pt.x * pt.py - pt.y * pt.px);
}

LadderPoint evolve_ladder(const MotionSpec& spec, double t) {
  return {std::polar(spec.alpha0, (1.0 + spec.gamma) * t + spec.theta1),
          std::polar(spec.beta0, (1.0 - spec.gamma) * t + spec.theta2)};
}

PhasePoint evolve(const MotionSpec& spec, double t) {
  const double a1 = (1.0 + spec.gamma) * t + spec.theta1;
  const double a2 = (1.0 - spec.gamma) * t + spec.theta2;
  const double ca = spec.alpha0 * std::cos(a1), sa = spec.alpha0 * std::sin(a1);
  const double cb = spec.beta0 * std::cos(a2), sb = spec.beta0 * std::sin(a2);
  return {ca + cb, sb - sa, -sa - sb, cb - ca};
}

ConstantsOfMotion constants(const PhasePoint& pt, const RationalRatio& ratio) {
  const LadderPoint lp = ladder_from_cartesian(pt);
  ConstantsOfMotion c;
  c.M = std::norm(lp.alpha_plus);
  c.N = std::norm(lp.beta_plus);
  c.L = pt.x * pt.py - pt.y * pt.px;
  c.S_plus = std::pow(lp.alpha_minus(), ratio.q()) * std::pow(lp.beta_plus, ratio.p());
  return c;
}

double v_eff(double rho, double ell, double gamma) {
  if (!(rho > 0.0)) throw DomainError("v_eff: rho must be positive");
  return ell * ell / (rho * rho) + rho * rho - 2.0 * gamma * ell;
}

double orbit_ho(double eps, double ell, double phi0, double phi) {
  if (eps < std::fabs(ell)) throw DomainError("orbit_ho: eps < |ell|, no classical orbit");
  if (ell == 0.0) throw DomainError("orbit_ho: ell = 0, degenerate orbit through the origin");
  const double e = std::sqrt(std::max(0.0, eps * eps - ell * ell));
  return std::fabs(ell) / std::sqrt(eps - e * std::cos(2.0 * phi - phi0));
}

std::pair<double, double> orbit_landau(double eps, double ell, double phi0, double phi) {
  const double d2 = 0.5 * eps + ell;
  if (d2 < 0.0) throw DomainError("orbit_landau: eps/2 + ell < 0");
  const double two_d = 2.0 * std::sqrt(d2);
  const double c = std::cos(phi - phi0);
  const double disc = two_d * two_d * c * c - 4.0 * ell;
  if (disc < 0.0) throw DomainError("orbit_landau: phi outside the angular support of the circle");
  const double root = std::sqrt(disc);
  return {0.5 * (two_d * c + root), 0.5 * (two_d * c - root)};
}

cplx orbit_residual(const PhasePoint& pt, const RationalRatio& ratio, double eps, double ell, double phi0) {
  const int p = ratio.p();
  const int q = ratio.q();
  const double g = gamma_of(ratio);
  const double lhs_mod = std::pow(2.0, -0.5 * (p + q)) * std::pow(std::max(0.0, eps + (g - 1.0) * ell), 0.5 * q) *
                         std::pow(std::max(0.0, eps + (g + 1.0) * ell), 0.5 * p);
  const cplx lhs = std::polar(lhs_mod, phi0);

  const double rho = pt.rho();
  if (!(rho > 0.0)) throw DomainError("orbit_residual: point at the origin");
  const double phi = pt.phi();
  const double p_rho = (pt.x * pt.px + pt.y * pt.py) / rho;
  const double p_phi = pt.x * pt.py - pt.y * pt.px;
  const cplx u(rho - p_phi / rho, p_rho);
  const cplx v(rho + p_phi / rho, -p_rho);
  const cplx rhs = std::polar(std::pow(2.0, -(p + q)), (p + q) * phi) * std::pow(u, q) * std::pow(v, p);
  return lhs - rhs;
}

double common_period(const MotionSpec& spec, const RationalRatio& ratio) {
  const int p = ratio.p();
  const int q = ratio.q();
  const double base = std::numbers::pi * (p + q);
  const bool has_a = spec.alpha0 != 0.0 && p > 0;  // alpha rotates at 2p/(p+q)
  const bool has_b = spec.beta0 != 0.0 && q > 0;   // beta rotates at 2q/(p+q)
  if (has_a && has_b) return base;
  if (has_a) return base / p;
  if (has_b) return base / q;
  return 0.0;
}

namespace {

double p_rho(const PhasePoint& pt) {
  const double r = pt.rho();
  return r > 0.0 ? (pt.x * pt.px + pt.y * pt.py) / r : 0.0;
}

}  // namespace

OrbitReport analyze_orbit(const MotionSpec& spec, const RationalRatio& ratio, double closure_tol) {
  if (std::fabs(spec.gamma - gamma_of(ratio)) > 1e-12) {
    throw NotApplicableError("analyze_orbit: gamma does not match the ratio " + std::to_string(ratio.p()) + "/" +
                             std::to_string(ratio.q()));
  }
  if (spec.alpha0 < 0.0 || spec.beta0 < 0.0) throw DomainError("analyze_orbit: negative amplitude");

  const int order = ratio.order();
  OrbitReport rep;
  rep.phi_period = 2.0 * std::numbers::pi / order;
  rep.period = common_period(spec, ratio);

  const PhasePoint start = evolve(spec, 0.0);
  const bool moving_a = spec.alpha0 > 0.0 && ratio.p() > 0;
  const bool moving_b = spec.beta0 > 0.0 && ratio.q() > 0;
  if (!moving_a && !moving_b) {
    rep.kind = OrbitKind::Stationary;
    rep.closed = true;
    return rep;
  }

  rep.closure_residual = distance(evolve(spec, rep.period), start);
  rep.closed = rep.closure_residual < closure_tol;

  // rotating by 2 pi/(p+q) maps the orbit onto itself: z(t + k pi) = e^{2 pi i/(p+q)} z(t), -k p = 1 mod (p+q)
  if (order > 1) {
    int k = 0;
    while (((-k * ratio.p()) % order + order) % order != 1 % order) ++k;
    const cplx rot = std::polar(1.0, rep.phi_period);
    const int samples = 512;
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
      const double t = rep.period * i / samples;
      const PhasePoint a = evolve(spec, t);
      const PhasePoint b = evolve(spec, t + k * std::numbers::pi);
      worst = std::max(worst, std::abs(cplx(b.x, b.y) - rot * cplx(a.x, a.y)));
    }
    rep.phi_period_residual = worst;
  }

  // a circle about the origin: only one frequency present (or the other amplitude vanishes)
  if (!(moving_a && moving_b) && !(ratio.is_landau() && spec.alpha0 > 0.0 && spec.beta0 > 0.0)) {
    rep.kind = OrbitKind::Circle;
    return rep;
  }

  const int n = 4096 * order;
  const double h = rep.period / n;
  int changes = 0;
  double prev = p_rho(evolve(spec, (n - 0.5) * h));
  for (int i = 0; i < n; ++i) {
    const double cur = p_rho(evolve(spec, (i + 0.5) * h));
    if ((prev > 0.0) != (cur > 0.0)) ++changes;
    prev = cur;
  }
  rep.turning_points = changes;
  rep.kind = OrbitKind::Lobed;
  return rep;
}

OrbitReport analyze_orbit(const MotionSpec& spec, double closure_tol) {
  const auto ratio = rationalize(spec.gamma);
  if (!ratio) throw NotApplicableError("analyze_orbit: gamma is not a rational ratio within tolerance");
  MotionSpec exact = spec;
  exact.gamma = gamma_of(*ratio);
  return analyze_orbit(exact, *ratio, closure_tol);
}

PhasePoint hamilton_field(const PhasePoint& pt, double gamma) {
  return {pt.px + gamma * pt.y, pt.py - gamma * pt.x, -pt.x + gamma * pt.py, -pt.y - gamma * pt.px};
}

Trajectory integrate_hamilton(const PhasePoint& start, double gamma, double t_end, double dt, int sample_every) {
  const VectorField f = [gamma](double, std::span<const double> y, std::span<double> dy) {
    const PhasePoint v = hamilton_field({y[0], y[1], y[2], y[3]}, gamma);
    dy[0] = v.x;
    dy[1] = v.y;
    dy[2] = v.px;
    dy[3] = v.py;
  };
  OdeOptions opts;
  opts.sample_every = sample_every;
  const OdePath path = integrate_ode(f, {start.x, start.y, start.px, start.py}, {0.0, t_end}, dt, opts);
  Trajectory out;
  out.t = path.t;
  out.points.reserve(path.y.size());
  for (const auto& y : path.y) out.points.push_back({y[0], y[1], y[2], y[3]});
  return out;
}

Report bracket_algebra_check(const RationalRatio& ratio, std::span<const PhasePoint> points, double tolerance) {
  using namespace std::complex_literals;
  const int p = ratio.p();
  const int q = ratio.q();
  for (const PhasePoint& pt : points) {
    const LadderPoint lp = ladder_from_cartesian(pt);
    if (std::abs(lp.alpha_plus) + std::abs(lp.beta_plus) < 1e-3) {
      throw DomainError("bracket_algebra_check: sample point too close to the origin");
    }
  }

  const PhaseFunction am = [](const PhasePoint& z) { return ladder_from_cartesian(z).alpha_minus(); };
  const PhaseFunction ap = [](const PhasePoint& z) { return ladder_from_cartesian(z).alpha_plus; };
  const PhaseFunction bm = [](const PhasePoint& z) { return ladder_from_cartesian(z).beta_minus(); };
  const PhaseFunction bp = [](const PhasePoint& z) { return ladder_from_cartesian(z).beta_plus; };
  const PhaseFunction mm = [](const PhasePoint& z) { return cplx(std::norm(ladder_from_cartesian(z).alpha_plus)); };
  const PhaseFunction nn = [](const PhasePoint& z) { return cplx(std::norm(ladder_from_cartesian(z).beta_plus)); };
  const PhaseFunction sp = [ratio](const PhasePoint& z) { return constants(z, ratio).S_plus; };
  const PhaseFunction sm = [ratio](const PhasePoint& z) { return std::conj(constants(z, ratio).S_plus); };

  // a term with a zero coefficient is dropped, so negative powers never appear
  auto term = [](double coeff, double base1, int e1, double base2, int e2) {
    return coeff == 0.0 ? 0.0 : coeff * std::pow(base1, e1) * std::pow(base2, e2);
  };

  struct Acc {
    std::string name;
    double worst = 0.0;
  };
  std::vector<Acc> acc{{"am_ap"}, {"bm_bp"}, {"ap_bp"}, {"ap_bm"}, {"M_N"},   {"M_Sp"},
                       {"M_Sm"},  {"N_Sp"},  {"N_Sm"},  {"Sm_Sp"}};
  auto bump = [&](std::size_t i, cplx r) { acc[i].worst = std::max(acc[i].worst, std::abs(r)); };

  for (const PhasePoint& pt : points) {
    const ConstantsOfMotion c = constants(pt, ratio);
    const cplx s_plus = c.S_plus;
    const cplx s_minus = std::conj(c.S_plus);
    bump(0, poisson_fd(am, ap, pt, 1e-4, true) + 1i);
    bump(1, poisson_fd(bm, bp, pt, 1e-4, true) + 1i);
    bump(2, poisson_fd(ap, bp, pt, 1e-4, true));
    bump(3, poisson_fd(ap, bm, pt, 1e-4, true));
    bump(4, poisson_fd(mm, nn, pt, 1e-4, true));
    bump(5, poisson_fd(mm, sp, pt, 1e-4, true) - 1i * double(q) * s_plus);
    bump(6, poisson_fd(mm, sm, pt, 1e-4, true) + 1i * double(q) * s_minus);
    bump(7, poisson_fd(nn, sp, pt, 1e-4, true) + 1i * double(p) * s_plus);
    bump(8, poisson_fd(nn, sm, pt, 1e-4, true) - 1i * double(p) * s_minus);
    const cplx rhs = 1i * term(double(q) * q, c.M, q - 1, c.N, p) - 1i * term(double(p) * p, c.M, q, c.N, p - 1);
    bump(9, poisson_fd(sm, sp, pt, 1e-4, true) - rhs);
  }

  Report report;
  report.suite = "poisson";
  const std::string where = "ratio=" + std::to_string(p) + "/" + std::to_string(q) +
                            " points=" + std::to_string(points.size());
  for (const Acc& a : acc) report.add(a.name, a.worst, tolerance, where);
  return report;
}

std::vector<TrajectoryRow> sample_trajectory(const MotionSpec& spec, const RationalRatio& ratio, double t_end,
                                             double dt) {
  if (!(dt > 0.0)) throw DomainError("sample_trajectory: dt must be positive");
  if (t_end < 0.0) throw DomainError("sample_trajectory: negative t_end");
  const auto steps = static_cast<long>(std::llround(t_end / dt));
  std::vector<TrajectoryRow> rows;
  rows.reserve(static_cast<std::size_t>(steps) + 1);
  for (long i = 0; i <= steps; ++i) {
    const double t = std::min(t_end, i * dt);
    TrajectoryRow row;
    row.t = t;
    row.pt = evolve(spec, t);
    const ConstantsOfMotion c = constants(row.pt, ratio);
    row.eps = hamiltonian(row.pt, spec.gamma);
    row.ell = c.L;
    row.abs_s = std::abs(c.S_plus);
    row.arg_s = std::arg(c.S_plus);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace fockdarwin
