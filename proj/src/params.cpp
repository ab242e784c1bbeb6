#include "fockdarwin/params.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>

#include "fockdarwin/errors.hpp"

namespace fockdarwin {

Frequencies frequencies(double B, double mass, double k, double e, double c) {
  if (!(mass > 0.0)) throw DomainError("frequencies: mass must be positive");
  if (!(c > 0.0)) throw DomainError("frequencies: c must be positive");
  if (!(k >= 0.0)) throw DomainError("frequencies: k must be nonnegative");

  Frequencies f;
  f.omega_c = e * B / (mass * c);
  f.omega_o = std::sqrt(k / mass);
  f.omega = std::hypot(0.5 * f.omega_c, f.omega_o);
  if (f.omega == 0.0) {
    throw DegenerateSystemError("frequencies: B = 0 and k = 0 give omega = 0");
  }
  f.gamma = std::clamp(0.5 * f.omega_c / f.omega, -1.0, 1.0);
  return f;
}

RationalRatio::RationalRatio(int p, int q) : p_(p), q_(q) {
  if (p < 0 || q < 0) throw DomainError("RationalRatio: p and q must be nonnegative");
  if (p == 0 && q == 0) throw DomainError("RationalRatio: p = q = 0");
  if (std::gcd(p, q) != 1) {
    throw DomainError("RationalRatio: " + std::to_string(p) + "/" + std::to_string(q) +
                      " is not in lowest terms");
  }
}

double gamma_of(const RationalRatio& ratio) {
  return static_cast<double>(ratio.p() - ratio.q()) / static_cast<double>(ratio.order());
}

std::optional<RationalRatio> rationalize(double gamma, int max_den, double tol) {
  if (max_den < 1) throw DomainError("rationalize: max_den must be >= 1");
  if (!(tol > 0.0)) throw DomainError("rationalize: tol must be positive");
  if (!std::isfinite(gamma) || std::fabs(gamma) > 1.0) return std::nullopt;

  const bool negative = gamma < 0.0;
  const double g = std::fabs(gamma);
  auto oriented = [negative](std::int64_t num, std::int64_t den) {
    return negative ? RationalRatio(static_cast<int>(den), static_cast<int>(num))
                    : RationalRatio(static_cast<int>(num), static_cast<int>(den));
  };

  if (1.0 - g <= tol) return oriented(1, 0);

  // x >= 1 is the ratio num/den on the branch being expanded.
  double x = (1.0 + g) / (1.0 - g);
  std::int64_t h_prev = 1, h_prev2 = 0;
  std::int64_t k_prev = 0, k_prev2 = 1;
  for (int term = 0; term < 64; ++term) {
    const double a_real = std::floor(x);
    if (a_real > static_cast<double>(max_den)) break;
    const auto a = static_cast<std::int64_t>(a_real);
    const std::int64_t h = a * h_prev + h_prev2;
    const std::int64_t k = a * k_prev + k_prev2;
    if (std::max(h, k) > max_den) break;

    const double approx = static_cast<double>(h - k) / static_cast<double>(h + k);
    if (std::fabs(g - approx) <= tol) return oriented(h, k);

    h_prev2 = h_prev;
    h_prev = h;
    k_prev2 = k_prev;
    k_prev = k;
    const double frac = x - a_real;
    if (frac <= 1e-15 * x) break;
    x = 1.0 / frac;
  }
  return std::nullopt;
}

}  // namespace fockdarwin
