#include "fockdarwin/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "fockdarwin/errors.hpp"

namespace fockdarwin {

double laguerre(int p, int alpha, double x) {
  if (p < 0 || alpha < 0) throw DomainError("laguerre: negative degree or order");
  if (p == 0) return 1.0;
  const double a = alpha;
  double prev = 1.0;
  double curr = 1.0 + a - x;
  for (int k = 1; k < p; ++k) {
    const double next = ((2.0 * k + 1.0 + a - x) * curr - (k + a) * prev) / (k + 1.0);
    prev = curr;
    curr = next;
  }
  return curr;
}

namespace {

constexpr double kSeriesLimit = 15.0;

double bessel_series(int order, double x) {
  const double half = 0.5 * x;
  const double q = half * half;
  double term = order == 0 ? 1.0 : half;
  double sum = term;
  for (int k = 1; k < 500; ++k) {
    term *= q / (static_cast<double>(k) * static_cast<double>(k + order));
    sum += term;
    if (term < 1e-17 * sum) break;
  }
  return sum;
}

// e^{-x} I_nu(x) ~ (2 pi x)^{-1/2} sum_k (-1)^k prod_{j<=k} (mu - (2j-1)^2) / (k! (8x)^k).
double bessel_asymptotic_scaled(int order, double x) {
  const double mu = 4.0 * order * order;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 200; ++k) {
    const double odd = 2.0 * k - 1.0;
    const double next = -term * (mu - odd * odd) / (8.0 * k * x);
    if (std::fabs(next) >= std::fabs(term)) break;  // asymptotic series started diverging
    term = next;
    sum += term;
    if (std::fabs(term) < 1e-17 * std::fabs(sum)) break;
  }
  return sum / std::sqrt(2.0 * std::numbers::pi * x);
}

void check_bessel_args(int order, double x) {
  if (order != 0 && order != 1) throw DomainError("bessel_i: only orders 0 and 1");
  if (!(x >= 0.0)) throw DomainError("bessel_i: negative argument");
}

}  // namespace

double bessel_i(int order, double x) {
  check_bessel_args(order, x);
  if (x < kSeriesLimit) return bessel_series(order, x);
  return std::exp(x) * bessel_asymptotic_scaled(order, x);
}

double bessel_i_scaled(int order, double x) {
  check_bessel_args(order, x);
  if (x < kSeriesLimit) return std::exp(-x) * bessel_series(order, x);
  return bessel_asymptotic_scaled(order, x);
}

OdePath integrate_ode(const VectorField& f, std::vector<double> y0, std::pair<double, double> t_span,
                      double dt, const OdeOptions& options) {
  if (!(dt > 0.0)) throw DomainError("integrate_ode: dt must be positive");
  const auto [t0, t1] = t_span;
  const double span = t1 - t0;
  const auto steps = static_cast<long>(std::ceil(std::fabs(span) / dt - 1e-9));
  const double h = steps > 0 ? span / static_cast<double>(steps) : 0.0;
  const int every = std::max(1, options.sample_every);
  const std::size_t n = y0.size();

  OdePath path;
  path.t.push_back(t0);
  path.y.push_back(y0);

  std::vector<double> y = std::move(y0);
  std::vector<double> k1(n), k2(n), k3(n), k4(n), tmp(n);
  for (long step = 0; step < steps; ++step) {
    const double t = t0 + h * static_cast<double>(step);
    f(t, y, k1);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + 0.5 * h * k1[i];
    f(t + 0.5 * h, tmp, k2);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + 0.5 * h * k2[i];
    f(t + 0.5 * h, tmp, k3);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + h * k3[i];
    f(t + h, tmp, k4);
    for (std::size_t i = 0; i < n; ++i) y[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);

    const double t_next = step + 1 == steps ? t1 : t0 + h * static_cast<double>(step + 1);
    if (!std::all_of(y.begin(), y.end(), [](double v) { return std::isfinite(v); })) {
      throw IntegrationFailure("integrate_ode: non-finite state", t_next);
    }
    const bool stop = options.stop && options.stop(t_next, y);
    if ((step + 1) % every == 0 || step + 1 == steps || stop) {
      path.t.push_back(t_next);
      path.y.push_back(y);
    }
    if (stop) {
      path.halted = true;
      break;
    }
  }
  return path;
}

namespace {

using Partials = std::array<std::complex<double>, 4>;  // d/dx, d/dpx, d/dy, d/dpy

Partials central_partials(const PhaseFunction& f, const PhasePoint& pt, double h) {
  Partials d;
  const std::array<double PhasePoint::*, 4> coords{&PhasePoint::x, &PhasePoint::px, &PhasePoint::y,
                                                   &PhasePoint::py};
  for (std::size_t i = 0; i < 4; ++i) {
    PhasePoint plus = pt;
    PhasePoint minus = pt;
    plus.*coords[i] += h;
    minus.*coords[i] -= h;
    d[i] = (f(plus) - f(minus)) / (2.0 * h);
  }
  return d;
}

Partials partials(const PhaseFunction& f, const PhasePoint& pt, double h, bool richardson) {
  Partials coarse = central_partials(f, pt, h);
  if (!richardson) return coarse;
  const Partials fine = central_partials(f, pt, 0.5 * h);
  for (std::size_t i = 0; i < 4; ++i) coarse[i] = (4.0 * fine[i] - coarse[i]) / 3.0;
  return coarse;
}

}  // namespace

std::complex<double> poisson_fd(const PhaseFunction& f, const PhaseFunction& g, const PhasePoint& pt,
                                double h, bool richardson) {
  if (!(h > 0.0)) throw DomainError("poisson_fd: h must be positive");
  const Partials df = partials(f, pt, h, richardson);
  const Partials dg = partials(g, pt, h, richardson);
  return df[0] * dg[1] - df[1] * dg[0] + df[2] * dg[3] - df[3] * dg[2];
}

void gauss_legendre(int n, double a, double b, std::vector<double>& nodes, std::vector<double>& weights) {
  if (n < 1) throw DomainError("gauss_legendre: need at least one node");
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = z;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (z * p1 - p0) / (z * z - 1.0);
      const double dz = p1 / dp;
      z -= dz;
      if (std::fabs(dz) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - z * z) * dp * dp);
    nodes[i] = mid - half * z;
    nodes[n - 1 - i] = mid + half * z;
    weights[i] = half * w;
    weights[n - 1 - i] = half * w;
  }
}

Grid2D::Grid2D(double radius, int n_rho, int n_phi) : radius_(radius) {
  if (!(radius > 0.0)) throw DomainError("Grid2D: radius must be positive");
  if (n_rho < 1 || n_phi < 1) throw DomainError("Grid2D: node counts must be positive");
  gauss_legendre(n_rho, 0.0, radius, rho_, rho_w_);
  phi_.resize(n_phi);
  phi_w_ = 2.0 * std::numbers::pi / n_phi;
  for (int j = 0; j < n_phi; ++j) phi_[j] = phi_w_ * j;
}

Grid2D Grid2D::for_amplitude(double amplitude) {
  const double a = std::fabs(amplitude);
  const double radius = std::max(8.0, 3.0 * a);
  const int n_rho = 64 + static_cast<int>(std::ceil(6.0 * radius));
  // Angular integrands behave like exp(kappa cos phi) with kappa ~ 2 rho a near the peak.
  const double kappa = 2.0 * (a + 8.0) * a;
  const int n_phi = 64 + static_cast<int>(std::ceil(8.0 * std::sqrt(kappa)));
  return Grid2D(radius, n_rho, n_phi);
}

}  // namespace fockdarwin
