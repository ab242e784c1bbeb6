#pragma once

#include <complex>
#include <span>
#include <utility>
#include <vector>

#include "fockdarwin/params.hpp"
#include "fockdarwin/phase_point.hpp"
#include "fockdarwin/report.hpp"

namespace fockdarwin {

// Complex ladder coordinates; the minus components are the conjugates.
struct LadderPoint {
  std::complex<double> alpha_plus;
  std::complex<double> beta_plus;

  std::complex<double> alpha_minus() const { return std::conj(alpha_plus); }
  std::complex<double> beta_minus() const { return std::conj(beta_plus); }
};

// alpha+(0) = alpha0 e^{i theta1}, beta+(0) = beta0 e^{i theta2}.
struct MotionSpec {
  double alpha0 = 0.0;
  double beta0 = 0.0;
  double theta1 = 0.0;
  double theta2 = 0.0;
  double gamma = 0.0;

  double energy() const { return (1.0 + gamma) * alpha0 * alpha0 + (1.0 - gamma) * beta0 * beta0; }
  double angular_momentum() const { return beta0 * beta0 - alpha0 * alpha0; }
};

struct ConstantsOfMotion {
  double M = 0.0;
  double N = 0.0;
  double L = 0.0;
  std::complex<double> S_plus;
};

/// alpha+- = (x - p_y)/2 -+ i (p_x + y)/2,  beta+- = (x + p_y)/2 +- i (y - p_x)/2.
LadderPoint ladder_from_cartesian(const PhasePoint& pt);
PhasePoint cartesian_from_ladder(const LadderPoint& lp);

/// (p_x^2 + p_y^2 + x^2 + y^2)/2 - gamma (x p_y - y p_x).
double hamiltonian(const PhasePoint& pt, double gamma);

/// Closed-form motion: x + i y = alpha0 e^{-i((1+g)t + theta1)} + beta0 e^{i((1-g)t + theta2)}.
PhasePoint evolve(const MotionSpec& spec, double t);
LadderPoint evolve_ladder(const MotionSpec& spec, double t);

ConstantsOfMotion constants(const PhasePoint& pt, const RationalRatio& ratio);

/// l^2/rho^2 + rho^2 - 2 gamma l.
double v_eff(double rho, double ell, double gamma);

/// Isotropic-oscillator ellipse rho(phi). Throws DomainError for eps < |ell|
/// or ell = 0 (the orbit degenerates to a segment through the origin).
double orbit_ho(double eps, double ell, double phi0, double phi);

/// Both branches of the Landau circle at angle phi. Throws DomainError when
/// eps/2 + ell < 0 or phi lies outside the circle's angular support.
std::pair<double, double> orbit_landau(double eps, double ell, double phi0, double phi);

/// e^{i phi0} |S+|(eps, ell) minus S+ written in polar variables at pt.
std::complex<double> orbit_residual(const PhasePoint& pt, const RationalRatio& ratio, double eps, double ell,
                                    double phi0);

enum class OrbitKind { Lobed, Circle, Stationary };

struct OrbitReport {
  OrbitKind kind = OrbitKind::Lobed;
  double period = 0.0;             // time period of the full motion
  double phi_period = 0.0;         // 2 pi/(p+q)
  int turning_points = 0;          // sign changes of p_rho over one period
  bool closed = false;
  double closure_residual = 0.0;   // |evolve(T) - evolve(0)|
  double phi_period_residual = 0.0;
};

/// Needs spec.gamma to match the ratio; otherwise NotApplicableError.
OrbitReport analyze_orbit(const MotionSpec& spec, const RationalRatio& ratio, double closure_tol = 1e-9);
/// Rationalizes spec.gamma first; NotApplicableError when that fails.
OrbitReport analyze_orbit(const MotionSpec& spec, double closure_tol = 1e-9);

/// Least common time period: pi (p+q), pi (p+q)/p when beta0 = 0, pi (p+q)/q when
/// alpha0 = 0; zero for a stationary point.
double common_period(const MotionSpec& spec, const RationalRatio& ratio);

/// (dx/dt, dy/dt, dpx/dt, dpy/dt).
PhasePoint hamilton_field(const PhasePoint& pt, double gamma);

struct Trajectory {
  std::vector<double> t;
  std::vector<PhasePoint> points;
};

/// RK4 integration of Hamilton's equations.
Trajectory integrate_hamilton(const PhasePoint& start, double gamma, double t_end, double dt, int sample_every = 1);

/// Finite-difference Poisson brackets of the ladder functions and of M, N, S+-
/// against their closed forms. Throws DomainError for points within 1e-3 of the origin.
Report bracket_algebra_check(const RationalRatio& ratio, std::span<const PhasePoint> points,
                             double tolerance = 1e-5);

struct TrajectoryRow {
  double t = 0.0;
  PhasePoint pt;
  double eps = 0.0;
  double ell = 0.0;
  double abs_s = 0.0;
  double arg_s = 0.0;
};

std::vector<TrajectoryRow> sample_trajectory(const MotionSpec& spec, const RationalRatio& ratio, double t_end,
                                             double dt);

}  // namespace fockdarwin
