#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "fockdarwin/phase_point.hpp"

namespace fockdarwin {

/// Associated Laguerre polynomial L_p^alpha(x), three-term recurrence in p.
double laguerre(int p, int alpha, double x);

/// Modified Bessel function I_0 or I_1 for x >= 0. Power series below x = 15,
/// Hankel asymptotic expansion above.
double bessel_i(int order, double x);

/// e^{-x} I_order(x); finite for arguments where I_order itself overflows.
double bessel_i_scaled(int order, double x);

// ---------------------------------------------------------------------------
// Fixed-step RK4.

using VectorField = std::function<void(double t, std::span<const double> y, std::span<double> dydt)>;

struct OdeOptions {
  // Keep every n-th step in the returned path (the final state is always kept).
  int sample_every = 1;
  // Returning true halts integration after the current step.
  std::function<bool(double t, std::span<const double> y)> stop;
};

struct OdePath {
  std::vector<double> t;
  std::vector<std::vector<double>> y;
  bool halted = false;

  const std::vector<double>& back() const { return y.back(); }
};

/// Integrates y' = f(t, y) from t_span.first to t_span.second. The step is
/// shrunk slightly so that the end point is hit exactly. Throws
/// IntegrationFailure when the state stops being finite.
OdePath integrate_ode(const VectorField& f, std::vector<double> y0, std::pair<double, double> t_span,
                      double dt, const OdeOptions& options = {});

// ---------------------------------------------------------------------------
// Canonical Poisson bracket in (x, p_x, y, p_y) by central differences.

using PhaseFunction = std::function<std::complex<double>(const PhasePoint&)>;

/// {f, g} = f_x g_px - f_px g_x + f_y g_py - f_py g_y. With `richardson` the
/// derivatives combine steps h and h/2 to cancel the O(h^2) term.
std::complex<double> poisson_fd(const PhaseFunction& f, const PhaseFunction& g, const PhasePoint& pt,
                                double h = 1e-4, bool richardson = false);

// ---------------------------------------------------------------------------
// Polar quadrature: Gauss-Legendre in rho on [0, R], trapezoid in phi.

class Grid2D {
 public:
  Grid2D(double radius, int n_rho, int n_phi);

  /// R = max(8, 3 * amplitude); node counts grow with the amplitude so that a
  /// Gaussian of unit width centred at distance `amplitude` is resolved.
  static Grid2D for_amplitude(double amplitude);

  double radius() const noexcept { return radius_; }
  std::span<const double> rho_nodes() const noexcept { return rho_; }
  std::span<const double> rho_weights() const noexcept { return rho_w_; }
  std::span<const double> phi_nodes() const noexcept { return phi_; }
  double phi_weight() const noexcept { return phi_w_; }
  std::size_t size() const noexcept { return rho_.size() * phi_.size(); }

  /// Sum of w_rho * w_phi * f(rho, phi): the flat measure d(rho) d(phi).
  /// Include the factor rho in f for the polar area element.
  template <class F>
  auto integrate(F&& f) const -> decltype(f(0.0, 0.0)) {
    using R = decltype(f(0.0, 0.0));
    R total{};
    for (std::size_t i = 0; i < rho_.size(); ++i) {
      R ring{};
      for (double phi : phi_) ring += f(rho_[i], phi);
      total += rho_w_[i] * ring;
    }
    return phi_w_ * total;
  }

 private:
  double radius_;
  std::vector<double> rho_;
  std::vector<double> rho_w_;
  std::vector<double> phi_;
  double phi_w_;
};

/// Gauss-Legendre nodes and weights on [a, b].
void gauss_legendre(int n, double a, double b, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace fockdarwin
