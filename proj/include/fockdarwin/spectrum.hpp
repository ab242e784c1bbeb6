#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "fockdarwin/params.hpp"

namespace fockdarwin {

// Occupation numbers of the a and b ladders.
struct QuantumLabel {
  int m = 0;
  int n = 0;

  int ell() const noexcept { return n - m; }
  int radial() const noexcept { return m < n ? m : n; }

  friend bool operator==(const QuantumLabel&, const QuantumLabel&) = default;
  friend auto operator<=>(const QuantumLabel&, const QuantumLabel&) = default;
};

// num/den, not necessarily reduced.
struct ExactEnergy {
  std::int64_t num = 0;
  std::int64_t den = 1;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// A degenerate eigenspace for rational gamma. Members share the integer key
// K = p*m + q*n and are ordered so that consecutive entries differ by
// (m, n) -> (m - q, n + p).
struct LevelMultiplet {
  std::int64_t key = 0;
  ExactEnergy energy;
  std::vector<QuantumLabel> members;

  std::size_t degeneracy() const noexcept { return members.size(); }
};

/// Dimensionless energy m(1+gamma) + n(1-gamma) + 1.
double energy(const QuantumLabel& label, double gamma);

/// (2 p_rad + |ell| + 1) omega - ell omega_c / 2, with hbar = 1.
double energy_lp(int ell, int p_rad, double omega, double omega_c);

/// Exact energy 2K/(p+q) + 1 of a key.
ExactEnergy multiplet_energy(std::int64_t key, const RationalRatio& ratio);

/// All states with energy <= eps_max grouped by key, ascending in energy.
/// Throws InfiniteDegeneracyError in the Landau limits.
std::vector<LevelMultiplet> enumerate_levels(const RationalRatio& ratio, double eps_max);

struct SweepRow {
  double parameter = 0.0;  // gamma or B
  double gamma = 0.0;
  int m = 0;
  int n = 0;
  double energy = 0.0;
};

enum class SweepAxis { Gamma, MagneticField };

/// Energies of all (m, n) with m <= m_max, n <= n_max over a grid. The
/// magnetic-field axis uses e = m = k = c = 1, i.e. mkc^2/e^2 = 1.
std::vector<SweepRow> sweep_levels(int m_max, int n_max, const std::vector<double>& grid, SweepAxis axis);

// ---------------------------------------------------------------------------
// Eigenfunctions in the rho^{1/2}-weighted convention, normalized with d(rho) d(phi).

/// Normalization K = (-1)^{p_rad} sqrt(p_rad! / (pi (p_rad + |ell|)!)). The sign makes
/// the closed form agree with (a+)^m (b+)^n Psi_00 / sqrt(m! n!).
double eigenfunction_norm(const QuantumLabel& label);

std::complex<double> eigenfunction(const QuantumLabel& label, double rho, double phi);

// Value and first derivatives of a wavefunction at a point.
struct WaveJet {
  std::complex<double> value;
  std::complex<double> d_rho;
  std::complex<double> d_phi;
};

/// Closed-form value and analytic derivatives; rho > 0.
WaveJet eigenfunction_jet(const QuantumLabel& label, double rho, double phi);

enum class Ladder { AMinus, APlus, BMinus, BPlus };

/// Applies the polar differential realization of a ladder operator, e.g.
///   a- = (1/2) e^{i phi} (d_rho - (-i d_phi + 1/2)/rho + rho),
/// to a wavefunction given by its jet at (rho, phi).
std::complex<double> apply_ladder(Ladder op, const WaveJet& jet, double rho, double phi);

}  // namespace fockdarwin
