#pragma once

#include <optional>
#include <ostream>

namespace fockdarwin {

// Physical frequencies of the Fock-Darwin system and their dimensionless ratio.
//   omega_c = eB/(mc),  omega_o = sqrt(k/m),  omega = sqrt(omega_c^2/4 + omega_o^2),
//   gamma   = (omega_c/2)/omega  in [-1, 1].
struct Frequencies {
  double omega_c = 0.0;
  double omega_o = 0.0;
  double omega = 0.0;
  double gamma = 0.0;
};

Frequencies frequencies(double B, double mass, double k, double e, double c);

enum class Branch { Positive, Negative };

// (1 + gamma)/(1 - gamma) = p/q in lowest terms. p = q = 1 is the isotropic oscillator,
// (1, 0) the Landau limit with gamma = +1 and (0, 1) the one with gamma = -1.
class RationalRatio {
 public:
  RationalRatio(int p, int q);

  int p() const noexcept { return p_; }
  int q() const noexcept { return q_; }
  int order() const noexcept { return p_ + q_; }

  // Sign of gamma. On the negative branch the roles of the a and b ladders swap.
  Branch branch() const noexcept { return p_ >= q_ ? Branch::Positive : Branch::Negative; }
  bool is_oscillator() const noexcept { return p_ == 1 && q_ == 1; }
  bool is_landau() const noexcept { return p_ == 0 || q_ == 0; }

  friend bool operator==(const RationalRatio&, const RationalRatio&) = default;
  friend std::ostream& operator<<(std::ostream& os, const RationalRatio& r) {
    return os << r.p_ << '/' << r.q_;
  }

 private:
  int p_;
  int q_;
};

// (p - q)/(p + q).
double gamma_of(const RationalRatio& ratio);

// Continued-fraction convergents of (1+gamma)/(1-gamma). Returns the first convergent
// with max(p, q) <= max_den whose gamma is within tol, or nothing.
std::optional<RationalRatio> rationalize(double gamma, int max_den = 64, double tol = 1e-9);

}  // namespace fockdarwin
