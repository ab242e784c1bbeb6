#include "fockdarwin/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numbers>

#include "fockdarwin/errors.hpp"
#include "fockdarwin/numerics.hpp"

namespace fockdarwin {

double energy(const QuantumLabel& label, double gamma) {
  return label.m * (1.0 + gamma) + label.n * (1.0 - gamma) + 1.0;
}

double energy_lp(int ell, int p_rad, double omega, double omega_c) {
  return (2.0 * p_rad + std::abs(ell) + 1.0) * omega - 0.5 * ell * omega_c;
}

ExactEnergy multiplet_energy(std::int64_t key, const RationalRatio& ratio) {
  const std::int64_t order = ratio.order();
  return {2 * key + order, order};
}

std::vector<LevelMultiplet> enumerate_levels(const RationalRatio& ratio, double eps_max) {
  if (ratio.is_landau()) {
    throw InfiniteDegeneracyError("enumerate_levels: Landau limit has infinitely degenerate levels; "
                                  "use the Landau level formula 2m+1 instead");
  }
  if (!(eps_max > 1.0)) throw DomainError("enumerate_levels: eps_max must exceed the ground energy 1");

  const std::int64_t p = ratio.p();
  const std::int64_t q = ratio.q();
  // eps <= eps_max  <=>  K <= (eps_max - 1)(p + q)/2
  const auto key_max = static_cast<std::int64_t>(std::floor((eps_max - 1.0) * (p + q) / 2.0 + 1e-9));

  std::map<std::int64_t, std::vector<QuantumLabel>> groups;
  for (std::int64_t m = 0; p * m <= key_max; ++m) {
    for (std::int64_t n = 0; p * m + q * n <= key_max; ++n) {
      groups[p * m + q * n].push_back({static_cast<int>(m), static_cast<int>(n)});
    }
  }

  std::vector<LevelMultiplet> levels;
  levels.reserve(groups.size());
  for (auto& [key, members] : groups) {
    std::sort(members.begin(), members.end(),
              [](const QuantumLabel& a, const QuantumLabel& b) { return a.m > b.m; });
    levels.push_back({key, multiplet_energy(key, ratio), std::move(members)});
  }
  return levels;
}

std::vector<SweepRow> sweep_levels(int m_max, int n_max, const std::vector<double>& grid, SweepAxis axis) {
  if (grid.empty()) throw DomainError("sweep_levels: empty grid");
  if (m_max < 0 || n_max < 0) throw DomainError("sweep_levels: negative occupation bound");
  std::vector<SweepRow> rows;
  rows.reserve(grid.size() * static_cast<std::size_t>(m_max + 1) * static_cast<std::size_t>(n_max + 1));
  for (double value : grid) {
    const double gamma = axis == SweepAxis::Gamma ? value : frequencies(value, 1.0, 1.0, 1.0, 1.0).gamma;
    for (int m = 0; m <= m_max; ++m) {
      for (int n = 0; n <= n_max; ++n) {
        rows.push_back({value, gamma, m, n, energy({m, n}, gamma)});
      }
    }
  }
  return rows;
}

double eigenfunction_norm(const QuantumLabel& label) {
  const int p = label.radial();
  const int a = std::abs(label.ell());
  const double log_k = 0.5 * (std::lgamma(p + 1.0) - std::lgamma(p + a + 1.0) - std::log(std::numbers::pi));
  return (p % 2 == 0 ? 1.0 : -1.0) * std::exp(log_k);
}

std::complex<double> eigenfunction(const QuantumLabel& label, double rho, double phi) {
  if (rho <= 0.0) return 0.0;
  const int ell = label.ell();
  const int a = std::abs(ell);
  const double radial = std::exp((a + 0.5) * std::log(rho) - 0.5 * rho * rho) *
                        laguerre(label.radial(), a, rho * rho);
  return eigenfunction_norm(label) * radial * std::polar(1.0, ell * phi);
}

WaveJet eigenfunction_jet(const QuantumLabel& label, double rho, double phi) {
  if (!(rho > 0.0)) throw DomainError("eigenfunction_jet: rho must be positive");
  const int ell = label.ell();
  const int a = std::abs(ell);
  const int p = label.radial();
  const double s = a + 0.5;
  const double x = rho * rho;
  const double envelope = std::exp(s * std::log(rho) - 0.5 * x);
  const double lag = laguerre(p, a, x);
  const double lag_prime = p > 0 ? -laguerre(p - 1, a + 1, x) : 0.0;

  const std::complex<double> angular = eigenfunction_norm(label) * std::polar(1.0, ell * phi);
  WaveJet jet;
  jet.value = angular * envelope * lag;
  jet.d_rho = angular * envelope * ((s / rho - rho) * lag + 2.0 * rho * lag_prime);
  jet.d_phi = std::complex<double>(0.0, ell) * jet.value;
  return jet;
}

std::complex<double> apply_ladder(Ladder op, const WaveJet& jet, double rho, double phi) {
  using namespace std::complex_literals;
  const std::complex<double> ang = -1i * jet.d_phi;  // L psi = -i d_phi psi
  const std::complex<double> psi = jet.value;
  switch (op) {
    case Ladder::AMinus:
      return 0.5 * std::polar(1.0, phi) * (jet.d_rho - (ang + 0.5 * psi) / rho + rho * psi);
    case Ladder::APlus:
      return 0.5 * std::polar(1.0, -phi) * (-jet.d_rho - (ang - 0.5 * psi) / rho + rho * psi);
    case Ladder::BMinus:
      return 0.5 * std::polar(1.0, -phi) * (jet.d_rho - (-ang + 0.5 * psi) / rho + rho * psi);
    case Ladder::BPlus:
      return 0.5 * std::polar(1.0, phi) * (-jet.d_rho + (ang + 0.5 * psi) / rho + rho * psi);
  }
  return 0.0;
}

}  // namespace fockdarwin
