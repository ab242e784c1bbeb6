#pragma once

#include <cmath>

namespace fockdarwin {

// Cartesian phase-space state in dimensionless units (hbar = m = omega = 1).
struct PhasePoint {
  double x = 0.0;
  double y = 0.0;
  double px = 0.0;
  double py = 0.0;

  bool finite() const {
    return std::isfinite(x) && std::isfinite(y) && std::isfinite(px) && std::isfinite(py);
  }
  double rho() const { return std::hypot(x, y); }
  double phi() const { return std::atan2(y, x); }

  friend PhasePoint operator+(PhasePoint a, const PhasePoint& b) {
    return {a.x + b.x, a.y + b.y, a.px + b.px, a.py + b.py};
  }
  friend PhasePoint operator-(PhasePoint a, const PhasePoint& b) {
    return {a.x - b.x, a.y - b.y, a.px - b.px, a.py - b.py};
  }
  friend PhasePoint operator*(double s, PhasePoint a) {
    return {s * a.x, s * a.y, s * a.px, s * a.py};
  }
};

// Max-norm distance between two phase points.
inline double distance(const PhasePoint& a, const PhasePoint& b) {
  return std::fmax(std::fmax(std::fabs(a.x - b.x), std::fabs(a.y - b.y)),
                   std::fmax(std::fabs(a.px - b.px), std::fabs(a.py - b.py)));
}

}  // namespace fockdarwin
