#include "fockdarwin/coherent.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "fockdarwin/errors.hpp"

namespace fockdarwin {

using cplx = std::complex<double>;

CoherentLabel coherent_label_for(const MotionSpec& spec) {
  return {std::polar(spec.alpha0, -spec.theta1), std::polar(spec.beta0, -spec.theta2)};
}

double coherent_log_norm(const CoherentLabel& label) {
  const double u2 = std::norm(label.center());
  const double x = 0.5 * u2;
  const double bracket = u2 * bessel_i_scaled(1, x) + (u2 + 1.0) * bessel_i_scaled(0, x);
  return std::log(2.0) - 1.5 * std::log(std::numbers::pi) - u2 - std::log(bracket);
}

double coherent_norm(const CoherentLabel& label) { return std::exp(coherent_log_norm(label)); }

namespace {

// rho (alpha e^{-i phi} + beta e^{i phi})
cplx exponent_term(const CoherentLabel& label, double rho, double phi) {
  return rho * (label.alpha * std::polar(1.0, -phi) + label.beta * std::polar(1.0, phi));
}

}  // namespace

cplx coherent_psi(const CoherentLabel& label, double rho, double phi) {
  if (rho <= 0.0) return 0.0;
  const double log_k = 0.5 * coherent_log_norm(label);
  return std::exp(log_k + 0.5 * std::log(rho) - 0.5 * rho * rho + exponent_term(label, rho, phi));
}

WaveJet coherent_jet(const CoherentLabel& label, double rho, double phi) {
  using namespace std::complex_literals;
  if (!(rho > 0.0)) throw DomainError("coherent_jet: rho must be positive");
  const cplx a = label.alpha * std::polar(1.0, -phi);
  const cplx b = label.beta * std::polar(1.0, phi);
  WaveJet jet;
  jet.value = coherent_psi(label, rho, phi);
  jet.d_rho = jet.value * (0.5 / rho - rho + a + b);
  jet.d_phi = jet.value * (1i * rho * (b - a));
  return jet;
}

double coherent_density(const CoherentLabel& label, double rho, double phi) {
  if (rho <= 0.0) return 0.0;
  const double u = label.u();
  const double log_d = coherent_log_norm(label) + std::log(rho) - rho * rho + 2.0 * rho * u * std::cos(phi - label.phi0());
  return std::exp(log_d);
}

std::vector<double> density_grid(const CoherentLabel& label, const Grid2D& grid) {
  std::vector<double> out;
  out.reserve(grid.size());
  for (double rho : grid.rho_nodes()) {
    for (double phi : grid.phi_nodes()) out.push_back(coherent_density(label, rho, phi));
  }
  return out;
}

double total_mass(const CoherentLabel& label, const Grid2D& grid) {
  return grid.integrate([&](double rho, double phi) { return rho * coherent_density(label, rho, phi); });
}

EvolvedLabel evolve_label(const CoherentLabel& label, double gamma, double t) {
  return {{label.alpha * std::polar(1.0, -(1.0 + gamma) * t), label.beta * std::polar(1.0, -(1.0 - gamma) * t)},
          std::polar(1.0, -t)};
}

std::pair<double, double> expected_position(const CoherentLabel& label, const Grid2D& grid) {
  const cplx mean = grid.integrate([&](double rho, double phi) {
    return std::polar(rho * rho * coherent_density(label, rho, phi), phi);
  });
  return {mean.real(), mean.imag()};
}

std::pair<double, double> expected_position(const CoherentLabel& label) {
  return expected_position(label, Grid2D::for_amplitude(label.u()));
}

EhrenfestResult ehrenfest_track(const MotionSpec& spec, double t_end, int samples) {
  if (samples < 1) throw DomainError("ehrenfest_track: need at least one sample");
  const CoherentLabel start = coherent_label_for(spec);
  EhrenfestResult res;
  for (int i = 0; i < samples; ++i) {
    const double t = samples == 1 ? 0.0 : t_end * i / (samples - 1);
    const auto [xq, yq] = expected_position(evolve_label(start, spec.gamma, t).label);
    const PhasePoint cl = evolve(spec, t);
    res.sup_error = std::max(res.sup_error, std::hypot(xq - cl.x, yq - cl.y));
    res.scale = std::max(res.scale, std::hypot(cl.x, cl.y));
  }
  return res;
}

Eigen::VectorXcd FockExpansion::as_vector() const {
  const int d = n_max + 1;
  Eigen::VectorXcd v(d * d);
  for (int m = 0; m < d; ++m) {
    for (int n = 0; n < d; ++n) v(m * d + n) = coefficients(m, n);
  }
  return v;
}

FockExpansion fock_expansion(const CoherentLabel& label, int n_max, double tail_bound) {
  if (n_max < 0) throw DomainError("fock_expansion: negative n_max");
  const double na = std::norm(label.alpha);
  const double nb = std::norm(label.beta);
  const int d = n_max + 1;

  // single-mode amplitudes e^{-|z|^2/2} z^k / sqrt(k!)
  auto mode = [d](cplx z) {
    std::vector<cplx> c(d);
    c[0] = std::exp(-0.5 * std::norm(z));
    for (int k = 1; k < d; ++k) c[k] = c[k - 1] * z / std::sqrt(static_cast<double>(k));
    return c;
  };
  const std::vector<cplx> ca = mode(label.alpha);
  const std::vector<cplx> cb = mode(label.beta);

  FockExpansion out;
  out.label = label;
  out.n_max = n_max;
  out.coefficients.resize(d, d);
  double kept_a = 0.0, kept_b = 0.0;
  for (int k = 0; k < d; ++k) {
    kept_a += std::norm(ca[k]);
    kept_b += std::norm(cb[k]);
  }
  for (int m = 0; m < d; ++m) {
    for (int n = 0; n < d; ++n) out.coefficients(m, n) = ca[m] * cb[n];
  }
  out.tail_mass = std::max(0.0, 1.0 - kept_a * kept_b);
  if (out.tail_mass > tail_bound) {
    throw TruncationError("fock_expansion: tail mass " + std::to_string(out.tail_mass) + " exceeds bound for n_max=" +
                          std::to_string(n_max) + " (|alpha|^2=" + std::to_string(na) +
                          ", |beta|^2=" + std::to_string(nb) + ")");
  }
  return out;
}

cplx fock_reconstruct(const FockExpansion& expansion, double rho, double phi) {
  cplx sum = 0.0;
  for (int m = 0; m <= expansion.n_max; ++m) {
    for (int n = 0; n <= expansion.n_max; ++n) {
      const cplx c = expansion.coefficients(m, n);
      if (c != 0.0) sum += c * eigenfunction({m, n}, rho, phi);
    }
  }
  return sum;
}

cplx fock_to_closed_factor(const CoherentLabel& label) {
  const double log_k0 = -0.5 * std::log(std::numbers::pi);
  const double log_k = 0.5 * coherent_log_norm(label);
  return std::exp(cplx(log_k0 - log_k - 0.5 * (std::norm(label.alpha) + std::norm(label.beta))) -
                  label.alpha * label.beta);
}

}  // namespace fockdarwin
