#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "fockdarwin/errors.hpp"
#include "fockdarwin/flows.hpp"
#include "fockdarwin/numerics.hpp"

using namespace fockdarwin;
using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;

namespace {

std::vector<PhasePoint> random_points(int n, unsigned seed, double scale = 1.0) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-scale, scale);
  std::vector<PhasePoint> pts;
  for (int i = 0; i < n; ++i) pts.push_back({u(rng), u(rng), u(rng), u(rng)});
  return pts;
}

double coord(const PhasePoint& p, int k) {
  const double v[] = {p.x, p.y, p.px, p.py};
  return v[k];
}

constexpr GeneratorKind kKinds[] = {GeneratorKind::S, GeneratorKind::S1, GeneratorKind::S2};

}  // namespace

TEST_CASE("closed forms at eta = 0 are the identity") {
  for (const PhasePoint& pt : random_points(5, 1)) {
    for (GeneratorKind k : kKinds) {
      CHECK(distance(flow_ho(k, 0.0, pt), pt) == 0.0);
      CHECK(distance(flow_landau(k, 0.0, pt), pt) == 0.0);
    }
  }
}

TEST_CASE("closed-form examples") {
  const PhasePoint pt{1.0, 2.0, 3.0, 4.0};
  CHECK(distance(flow_ho(GeneratorKind::S, kPi, pt), {-2.0, 1.0, -4.0, 3.0}) < 1e-15);
  CHECK(distance(flow_landau(GeneratorKind::S1, 2.0, pt), {1.0, 3.0, 2.0, 4.0}) == 0.0);
  CHECK_THROWS_AS(flow_closed({GeneratorKind::S1, RationalRatio(2, 1)}, 1.0, pt), NotApplicableError);
}

TEST_CASE("group composition and h invariance") {
  for (const PhasePoint& pt : random_points(5, 2)) {
    for (GeneratorKind k : kKinds) {
      for (auto ratio : {RationalRatio(1, 1), RationalRatio(1, 0)}) {
        const Generator g{k, ratio};
        const PhasePoint two = flow_closed(g, 0.4, flow_closed(g, 0.9, pt));
        CHECK(distance(two, flow_closed(g, 1.3, pt)) < 1e-14);
        const double gam = gamma_of(ratio);
        CHECK(std::fabs(hamiltonian(flow_closed(g, 1.7, pt), gam) - hamiltonian(pt, gam)) < 1e-12);
      }
    }
  }
}

TEST_CASE("closed forms are generated by their bracket") {
  for (const PhasePoint& pt : random_points(4, 3)) {
    for (GeneratorKind k : kKinds) {
      for (auto ratio : {RationalRatio(1, 1), RationalRatio(1, 0)}) {
        const Generator g{k, ratio};
        const double e = 1e-6;
        const PhasePoint fwd = flow_closed(g, e, pt);
        const PhasePoint bwd = flow_closed(g, -e, pt);
        const PhaseFunction G = [g](const PhasePoint& z) { return cplx(generator_value(g, z)); };
        for (int c = 0; c < 4; ++c) {
          const PhaseFunction u = [c](const PhasePoint& z) { return cplx(coord(z, c)); };
          const double measured = (coord(fwd, c) - coord(bwd, c)) / (2 * e);
          const double bracket = poisson_fd(u, G, pt, 1e-4, true).real();
          CHECK(std::fabs(measured - bracket) < 1e-5);
        }
      }
    }
  }
}

TEST_CASE("ODE flows reduce to the closed forms") {
  for (const PhasePoint& pt : random_points(3, 4)) {
    for (GeneratorKind k : kKinds) {
      const Generator ho{k, RationalRatio(1, 1)};
      const FlowResult fr = flow_ode(ho, {0.0, 2 * kPi}, pt, 1e-3, 50);
      for (std::size_t i = 0; i < fr.eta.size(); ++i) CHECK(distance(fr.path[i], flow_ho(k, fr.eta[i], pt)) < 1e-7);

      if (k == GeneratorKind::S) continue;
      const Generator lan{k, RationalRatio(1, 0)};
      const FlowResult fl = flow_ode(lan, {0.0, 2.0}, pt, 1e-3, 50);
      for (std::size_t i = 0; i < fl.eta.size(); ++i) CHECK(distance(fl.path[i], flow_landau(k, fl.eta[i], pt)) < 1e-9);
    }
  }
}

TEST_CASE("generic flows conserve h") {
  for (const PhasePoint& pt : random_points(3, 5, 0.7)) {
    for (GeneratorKind k : kKinds) {
      const FlowResult fr = flow_ode({k, RationalRatio(2, 1)}, {0.0, 4.0}, pt, 1e-3, 20);
      REQUIRE_FALSE(fr.halted);
      CHECK(fr.h_drift < 1e-8);
      CHECK(fr.generator_drift < 1e-8);
    }
  }
}

TEST_CASE("runaway integration halts") {
  // degree-5 field at |beta| ~ 3: RK4 with d_eta = 1e-3 is unstable here
  const LadderPoint lp{cplx(3.0, 0.2), cplx(1.2, -0.3)};
  const FlowResult fr = flow_ode({GeneratorKind::S1, RationalRatio(5, 1)}, {0.0, 50.0}, cartesian_from_ladder(lp), 1e-3, 100);
  CHECK(fr.halted);
  CHECK(fr.halt_eta < 1.0);
  CHECK(fr.path.back().finite());
}

TEST_CASE("hyperbolic family") {
  const double c1 = 1.0, c2 = 0.5, th2 = kPi / 8;
  for (double eta : {-3.0, -0.5, 0.0, 1.0, 4.0}) {
    const LadderPoint lp = flow_a2_ladder(eta, c1, c2, th2);
    const double r1 = std::abs(lp.alpha_plus), r2 = std::abs(lp.beta_plus);
    CHECK(2 * r1 * r1 + r2 * r2 == doctest::Approx(c1).epsilon(1e-14));
    // q theta1 - p theta2 = pi/2 up to the sign of tanh
    CHECK(std::fabs((lp.alpha_plus * std::conj(lp.beta_plus * lp.beta_plus)).real()) < 1e-15);
    CHECK(distance(cartesian_from_ladder(lp), flow_a2_closed(eta, c1, c2, th2)) < 1e-15);
  }
  const LadderPoint far = flow_a2_ladder(40.0, c1, c2, th2);
  CHECK(std::abs(far.beta_plus) < 1e-10);
  CHECK(std::abs(far.alpha_plus) == doctest::Approx(std::sqrt(c1 / 2)));

  for (double end : {2.0, -2.0}) {
    const FlowResult fr = flow_ode({GeneratorKind::S1, RationalRatio(2, 1)}, {0.0, end}, flow_a2_closed(0.0, c1, c2, th2), 1e-3, 20);
    for (std::size_t i = 0; i < fr.eta.size(); ++i) CHECK(distance(fr.path[i], flow_a2_closed(fr.eta[i], c1, c2, th2)) < 1e-6);
  }
}

TEST_CASE("linear-phase family") {
  const A1Result ok = flow_a1_check(RationalRatio(2, 1), 0.5, 1.0, 0.6, 0.3);
  CHECK(ok.applicable);
  CHECK_MESSAGE(ok.report.all_passed(), ok.report.to_json());
  CHECK(ok.rate1 == doctest::Approx(ok.predicted1).epsilon(1e-6));
  CHECK(ok.predicted1 == doctest::Approx(0.5 * std::pow(0.5, -1.0)));

  const A1Result bad = flow_a1_check(RationalRatio(2, 1), 0.5, 1.0, 1.9, 0.3);
  CHECK_FALSE(bad.applicable);
  CHECK(bad.rho_drift > 1e-4);
  CHECK_FALSE(bad.report.all_passed());

  CHECK_THROWS_AS(flow_a1_check(RationalRatio(1, 0), 0.5, 1.0, 0.0, 0.0), NotApplicableError);
}

TEST_CASE("closed_form_checks") {
  const auto pts = random_points(4, 6);
  for (auto ratio : {RationalRatio(1, 1), RationalRatio(1, 0)}) {
    const Report r = closed_form_checks(ratio, pts);
    CHECK_MESSAGE(r.all_passed(), r.to_json());
    CHECK(r.checks.size() > 10);
  }
  CHECK_THROWS_AS(closed_form_checks(RationalRatio(2, 1), pts), NotApplicableError);
}

TEST_CASE("S1 moves angular momentum at the bracket rate") {
  const Generator g{GeneratorKind::S1, RationalRatio(2, 1)};
  const PhasePoint pt{0.4, -0.3, 0.2, 0.5};
  const double d = 1e-3;
  const auto L = [](const PhasePoint& z) { return z.x * z.py - z.y * z.px; };
  const double measured =
      (L(flow_ode(g, {0.0, d}, pt, d / 8).path.back()) - L(flow_ode(g, {0.0, -d}, pt, d / 8).path.back())) / (2 * d);
  const PhaseFunction fl = [&](const PhasePoint& z) { return cplx(L(z)); };
  const PhaseFunction fg = [g](const PhasePoint& z) { return cplx(generator_value(g, z)); };
  CHECK(std::fabs(measured - poisson_fd(fl, fg, pt, 1e-4, true).real()) < 1e-5);
  CHECK(std::fabs(measured) > 1e-3);
}
