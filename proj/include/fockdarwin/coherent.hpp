#pragma once

#include <complex>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "fockdarwin/classical.hpp"
#include "fockdarwin/numerics.hpp"
#include "fockdarwin/spectrum.hpp"

namespace fockdarwin {

// Joint eigenvalues of a- and b-.
struct CoherentLabel {
  std::complex<double> alpha;
  std::complex<double> beta;

  std::complex<double> center() const { return alpha + std::conj(beta); }
  double u() const { return std::abs(center()); }
  double phi0() const { return std::arg(center()); }
};

/// Label whose density follows the classical motion of spec:
/// alpha = alpha0 e^{-i theta1}, beta = beta0 e^{-i theta2}.
CoherentLabel coherent_label_for(const MotionSpec& spec);

/// log |K|^2 with |K|^2 = 2 / (pi^{3/2} e^{u^2/2} (u^2 I1(u^2/2) + (u^2+1) I0(u^2/2))),
/// evaluated with exponentially scaled Bessel functions.
double coherent_log_norm(const CoherentLabel& label);
double coherent_norm(const CoherentLabel& label);

/// K rho^{1/2} e^{-rho^2/2} e^{rho (alpha e^{-i phi} + beta e^{i phi})}, K real positive.
std::complex<double> coherent_psi(const CoherentLabel& label, double rho, double phi);
WaveJet coherent_jet(const CoherentLabel& label, double rho, double phi);

/// |Psi|^2 = |K|^2 rho e^{-rho^2} e^{2 rho u cos(phi - phi0)}, a density for rho d(rho) d(phi).
double coherent_density(const CoherentLabel& label, double rho, double phi);

/// Density at every grid node, rho-major.
std::vector<double> density_grid(const CoherentLabel& label, const Grid2D& grid);

/// Integral of the density with weight rho d(rho) d(phi).
double total_mass(const CoherentLabel& label, const Grid2D& grid);

struct EvolvedLabel {
  CoherentLabel label;
  std::complex<double> global_phase;  // e^{-i t}
};

/// (alpha e^{-i(1+gamma)t}, beta e^{-i(1-gamma)t}).
EvolvedLabel evolve_label(const CoherentLabel& label, double gamma, double t);

/// Mean (x, y) under the density with weight rho d(rho) d(phi).
std::pair<double, double> expected_position(const CoherentLabel& label, const Grid2D& grid);
std::pair<double, double> expected_position(const CoherentLabel& label);

struct EhrenfestResult {
  double sup_error = 0.0;  // max_t |<r>(t) - r_cl(t)|
  double scale = 0.0;      // max_t |r_cl(t)|
  double relative() const { return scale > 0.0 ? sup_error / scale : sup_error; }
};

/// Compares expected_position of the evolving label with the classical orbit of spec
/// at `samples` equally spaced times in [0, t_end].
EhrenfestResult ehrenfest_track(const MotionSpec& spec, double t_end, int samples);

struct FockExpansion {
  CoherentLabel label;
  int n_max = 0;
  Eigen::MatrixXcd coefficients;  // (m, n)
  double tail_mass = 0.0;

  /// Flattened with index m * (n_max + 1) + n, matching FockOperatorSet.
  Eigen::VectorXcd as_vector() const;
};

/// e^{-(|alpha|^2 + |beta|^2)/2} alpha^m beta^n / sqrt(m! n!). Throws TruncationError when the
/// probability outside m, n <= n_max exceeds tail_bound.
FockExpansion fock_expansion(const CoherentLabel& label, int n_max, double tail_bound = 1e-10);

/// Sum of coefficient(m, n) * eigenfunction(m, n).
std::complex<double> fock_reconstruct(const FockExpansion& expansion, double rho, double phi);

/// The Fock series equals this constant times coherent_psi. The eigenfunctions are
/// normalized with d(rho) d(phi) while K uses rho d(rho) d(phi), so the factor is
/// K0 e^{-(|alpha|^2+|beta|^2)/2} e^{-alpha beta} / K with K0 = pi^{-1/2}.
std::complex<double> fock_to_closed_factor(const CoherentLabel& label);

}  // namespace fockdarwin
