#pragma once

#include <span>
#include <utility>
#include <vector>

#include "fockdarwin/classical.hpp"
#include "fockdarwin/params.hpp"
#include "fockdarwin/phase_point.hpp"
#include "fockdarwin/report.hpp"

namespace fockdarwin {

// S1 = Re S+, S2 = Im S+; S is L/2 for the isotropic oscillator and L otherwise.
enum class GeneratorKind { S, S1, S2 };

struct Generator {
  GeneratorKind kind = GeneratorKind::S1;
  RationalRatio ratio{1, 1};
};

const char* generator_name(GeneratorKind kind);
double generator_value(const Generator& g, const PhasePoint& pt);

/// Linear finite actions at gamma = 0; every trigonometric argument is eta/2.
PhasePoint flow_ho(GeneratorKind kind, double eta, const PhasePoint& pt);

/// Landau translations (eta/2 shifts). S = L generates a rotation by eta.
PhasePoint flow_landau(GeneratorKind kind, double eta, const PhasePoint& pt);

/// flow_ho for (1,1), flow_landau for (1,0); NotApplicableError otherwise.
PhasePoint flow_closed(const Generator& g, double eta, const PhasePoint& pt);

struct FlowResult {
  std::vector<double> eta;
  std::vector<PhasePoint> path;
  double h_drift = 0.0;          // max |h - h(0)| along the path
  double generator_drift = 0.0;  // max |G - G(0)|
  bool halted = false;           // |alpha| + |beta| exceeded 1e3 times its start value
  double halt_eta = 0.0;
};

/// RK4 on du/deta = {u, G} in (alpha+, beta+). Samples every `sample_every` steps.
/// Throws IntegrationFailure if the state stops being finite.
FlowResult flow_ode(const Generator& g, std::pair<double, double> eta_span, const PhasePoint& pt, double d_eta,
                    int sample_every = 1);

/// Hyperbolic S1 orbit for (p, q) = (2, 1) with q theta1 - p theta2 = pi/2.
PhasePoint flow_a2_closed(double eta, double c1, double c2, double theta2);
LadderPoint flow_a2_ladder(double eta, double c1, double c2, double theta2);

struct A1Result {
  Report report;
  bool applicable = false;
  double rate1 = 0.0;  // measured d theta1/d eta
  double rate2 = 0.0;
  double predicted1 = 0.0;  // (q/2) rho1^{q-2} rho2^p
  double predicted2 = 0.0;  // (p/2) rho1^q rho2^{p-2}
  double rho_drift = 0.0;
};

/// Integrates the S1 flow from alpha+ = rho1 e^{i phi1}, beta+ = rho2 e^{i phi2}
/// and measures whether the radii stay fixed and the phases grow linearly.
/// The precondition is rho1/rho2 = q/p and q phi1 - p phi2 = 0 (mod 2 pi).
A1Result flow_a1_check(const RationalRatio& ratio, double rho1, double rho2, double phi1, double phi2,
                       double eta_max = 2.0, double d_eta = 1e-3);

/// Generator-derivative, group-composition and h-invariance checks of the
/// closed-form flows, plus the bracket closure of {S, S1, S2}. Only for (1,1) and (1,0).
Report closed_form_checks(const RationalRatio& ratio, std::span<const PhasePoint> points);

}  // namespace fockdarwin
