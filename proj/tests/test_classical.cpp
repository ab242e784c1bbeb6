#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "fockdarwin/classical.hpp"
#include "fockdarwin/errors.hpp"

using namespace fockdarwin;
using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;

namespace {

std::vector<PhasePoint> random_points(int n, unsigned seed, double scale = 1.0) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-scale, scale);
  std::vector<PhasePoint> pts;
  while (static_cast<int>(pts.size()) < n) {
    const PhasePoint p{u(rng), u(rng), u(rng), u(rng)};
    if (p.rho() > 0.1) pts.push_back(p);
  }
  return pts;
}

const MotionSpec kLeft{10.0, 14.0, 0.0, 0.0, 1.0 / 3.0};
const MotionSpec kCenter{10.0, 15.0, 2.0, 3.0, 2.0 / 3.0};
const MotionSpec kRight{12.0, 12.0, 2.0, 1.0, 1.0 / 5.0};

}  // namespace

TEST_CASE("ladder map") {
  const LadderPoint zero = ladder_from_cartesian({0, 0, 0, 0});
  CHECK(zero.alpha_plus == cplx(0.0));
  CHECK(zero.beta_plus == cplx(0.0));
  const LadderPoint unit = ladder_from_cartesian({1, 0, 0, 0});
  CHECK(unit.alpha_plus == cplx(0.5));
  CHECK(unit.beta_plus == cplx(0.5));
  for (const PhasePoint& pt : random_points(50, 1, 3.0)) CHECK(distance(cartesian_from_ladder(ladder_from_cartesian(pt)), pt) < 1e-14);
}

TEST_CASE("hamiltonian") {
  CHECK(hamiltonian({0, 0, 0, 0}, 0.4) == 0.0);
  CHECK(hamiltonian({1, 0, 0, 0}, 0.0) == 0.5);
  for (const PhasePoint& pt : random_points(100, 2, 2.0)) {
    const LadderPoint lp = ladder_from_cartesian(pt);
    for (double g : {0.0, 0.2, -0.7, 1.0}) {
      CHECK(std::fabs(hamiltonian(pt, g) - ((1 + g) * std::norm(lp.alpha_plus) + (1 - g) * std::norm(lp.beta_plus))) < 1e-13);
    }
  }
}

TEST_CASE("evolve") {
  const PhasePoint p0 = evolve(kCenter, 0.0);
  CHECK(p0.x == doctest::Approx(10 * std::cos(2.0) + 15 * std::cos(3.0)));
  CHECK(p0.y == doctest::Approx(-10 * std::sin(2.0) + 15 * std::sin(3.0)));

  const MotionSpec circle{1.0, 0.0, 0.0, 0.0, 0.0};
  for (double t : {0.3, 1.0, 2.5}) {
    const PhasePoint pt = evolve(circle, t);
    CHECK(pt.x == doctest::Approx(std::cos(t)));
    CHECK(pt.y == doctest::Approx(-std::sin(t)));
  }

  const MotionSpec landau{1.5, 2.0, 0.4, 0.9, 1.0};
  for (double t : {0.1, 1.2, 2.9}) {
    const PhasePoint pt = evolve(landau, t);
    CHECK(std::hypot(pt.x - 2.0 * std::cos(0.9), pt.y - 2.0 * std::sin(0.9)) == doctest::Approx(1.5));
  }

  // evolve is the image of evolve_ladder
  for (double t : {0.0, 0.7, 4.0}) CHECK(distance(cartesian_from_ladder(evolve_ladder(kRight, t)), evolve(kRight, t)) < 1e-13);
}

TEST_CASE("constants of motion") {
  for (auto [p, q] : {std::pair{1, 1}, {2, 1}, {3, 2}, {1, 0}}) {
    const RationalRatio ratio(p, q);
    const double g = gamma_of(ratio);
    for (const PhasePoint& pt : random_points(30, 3, 1.5)) {
      const ConstantsOfMotion c = constants(pt, ratio);
      CHECK(std::fabs(c.L - (pt.x * pt.py - pt.y * pt.px)) < 1e-13);
      const double h = hamiltonian(pt, g);
      const double expected = std::pow(2.0, -(p + q)) * std::pow(h + (g - 1) * c.L, q) * std::pow(h + (g + 1) * c.L, p);
      CHECK(std::fabs(std::norm(c.S_plus) - expected) < 1e-10);
    }
  }
}

TEST_CASE("conservation along the analytic path") {
  const RationalRatio ratio(2, 1);
  const ConstantsOfMotion c0 = constants(evolve(kLeft, 0.0), ratio);
  for (int i = 1; i <= 100; ++i) {
    const ConstantsOfMotion c = constants(evolve(kLeft, 0.1 * i), ratio);
    CHECK(c.L == doctest::Approx(c0.L).epsilon(1e-12));
    CHECK(std::abs(c.S_plus - c0.S_plus) < 1e-9 * std::abs(c0.S_plus));
  }
  CHECK(c0.L == doctest::Approx(96.0));
  CHECK(kLeft.angular_momentum() == 96.0);
  CHECK(kCenter.angular_momentum() == 125.0);
  CHECK(kRight.angular_momentum() == 0.0);
}

TEST_CASE("effective potential") {
  CHECK_THROWS_AS(v_eff(0.0, 1.0, 0.2), DomainError);
  for (double t : {0.2, 1.3, 2.2}) {
    const PhasePoint pt = evolve(kLeft, t);
    const double p_rho = (pt.x * pt.px + pt.y * pt.py) / pt.rho();
    CHECK(p_rho * p_rho == doctest::Approx(2 * kLeft.energy() - v_eff(pt.rho(), 96.0, kLeft.gamma)).epsilon(1e-12));
  }
}

TEST_CASE("oscillator orbit formula") {
  CHECK(orbit_ho(3.0, 3.0, 0.0, 0.7) == doctest::Approx(std::sqrt(3.0)));
  CHECK_THROWS_AS(orbit_ho(1.0, 2.0, 0.0, 0.0), DomainError);
  CHECK_THROWS_AS(orbit_ho(1.0, 0.0, 0.0, 0.0), DomainError);

  const MotionSpec ho{1.0, 2.0, 0.3, 0.1, 0.0};
  const RationalRatio ratio(1, 1);
  const double phi0 = std::arg(constants(evolve(ho, 0.0), ratio).S_plus);
  for (int i = 0; i < 40; ++i) {
    const PhasePoint pt = evolve(ho, 0.157 * i);
    CHECK(std::fabs(orbit_ho(ho.energy(), ho.angular_momentum(), phi0, pt.phi()) - pt.rho()) < 1e-8);
  }
}

TEST_CASE("Landau orbit formula against a circumcircle fit") {
  const MotionSpec lan{1.0, 2.0, 0.5, 0.8, 1.0};
  const double eps = lan.energy();
  const double ell = lan.angular_momentum();
  const cplx a(evolve(lan, 0.0).x, evolve(lan, 0.0).y);
  const cplx b(evolve(lan, 1.0).x, evolve(lan, 1.0).y);
  const cplx c(evolve(lan, 2.0).x, evolve(lan, 2.0).y);
  const double d = 2.0 * (a.real() * (b.imag() - c.imag()) + b.real() * (c.imag() - a.imag()) + c.real() * (a.imag() - b.imag()));
  const cplx center((std::norm(a) * (b.imag() - c.imag()) + std::norm(b) * (c.imag() - a.imag()) + std::norm(c) * (a.imag() - b.imag())) / d,
                    (std::norm(a) * (c.real() - b.real()) + std::norm(b) * (a.real() - c.real()) + std::norm(c) * (b.real() - a.real())) / d);
  const double phi0 = std::arg(constants(evolve(lan, 0.0), RationalRatio(1, 0)).S_plus);
  CHECK(std::abs(center - std::polar(std::sqrt(0.5 * eps + ell), phi0)) < 1e-9);
  CHECK(std::fabs(std::abs(a - center) - std::sqrt(0.5 * eps)) < 1e-9);

  for (int i = 0; i < 20; ++i) {
    const PhasePoint pt = evolve(lan, 0.31 * i);
    const auto [r1, r2] = orbit_landau(eps, ell, phi0, pt.phi());
    CHECK(std::min(std::fabs(r1 - pt.rho()), std::fabs(r2 - pt.rho())) < 1e-9);
  }

  // ell = 0: the two branches meet at the origin
  const auto [r1, r2] = orbit_landau(2.0, 0.0, 0.0, 0.4);
  CHECK(r1 == doctest::Approx(2.0 * std::cos(0.4)));
  CHECK(r2 == doctest::Approx(0.0));
  CHECK_THROWS_AS(orbit_landau(1.0, -1.0, 0.0, 0.0), DomainError);
}

TEST_CASE("orbit residual") {
  const RationalRatio ratio(2, 1);
  const double eps = kLeft.energy();
  const double ell = kLeft.angular_momentum();
  const double phi0 = std::arg(constants(evolve(kLeft, 0.0), ratio).S_plus);
  for (int i = 0; i < 30; ++i) CHECK(std::abs(orbit_residual(evolve(kLeft, 0.3 * i), ratio, eps, ell, phi0)) < 1e-9 * eps * eps);

  // unit-scale orbit for the off-shell control
  const MotionSpec small{0.6, 0.9, 0.2, 0.4, 1.0 / 3.0};
  const double e2 = small.energy();
  const double l2 = small.angular_momentum();
  const double f2 = std::arg(constants(evolve(small, 0.0), ratio).S_plus);
  PhasePoint pt = evolve(small, 0.8);
  CHECK(std::abs(orbit_residual(pt, ratio, e2, l2, f2)) < 1e-9);
  pt.px += 0.1;
  CHECK(std::abs(orbit_residual(pt, ratio, e2, l2, f2)) > 1e-3);
}

TEST_CASE("orbit analysis") {
  const OrbitReport left = analyze_orbit(kLeft, RationalRatio(2, 1));
  CHECK(left.turning_points == 6);
  CHECK(left.phi_period == doctest::Approx(2 * kPi / 3));
  CHECK(left.period == doctest::Approx(3 * kPi));
  CHECK(left.closed);

  const OrbitReport right = analyze_orbit(kRight, RationalRatio(3, 2));
  CHECK(right.turning_points == 10);
  CHECK(right.closed);

  const OrbitReport center = analyze_orbit(kCenter);
  CHECK(center.turning_points == 12);
  CHECK(center.closure_residual < 1e-9);
  CHECK(center.phi_period_residual < 1e-8);

  const OrbitReport ellipse = analyze_orbit(MotionSpec{1.0, 2.0, 0.0, 0.0, 0.0}, RationalRatio(1, 1));
  CHECK(ellipse.period == doctest::Approx(2 * kPi));
  CHECK(ellipse.turning_points == 4);

  const OrbitReport circ = analyze_orbit(MotionSpec{1.0, 0.0, 0.0, 0.0, 0.0}, RationalRatio(1, 1));
  CHECK(circ.kind == OrbitKind::Circle);

  CHECK_THROWS_AS(analyze_orbit(kLeft, RationalRatio(3, 2)), NotApplicableError);
  CHECK_THROWS_AS(analyze_orbit(MotionSpec{1.0, 1.0, 0.0, 0.0, 1.0 / std::sqrt(2.0)}), NotApplicableError);
}

TEST_CASE("common period") {
  CHECK(common_period(kLeft, RationalRatio(2, 1)) == doctest::Approx(3 * kPi));
  CHECK(common_period(MotionSpec{1.0, 0.0, 0, 0, 1.0 / 3.0}, RationalRatio(2, 1)) == doctest::Approx(1.5 * kPi));
  CHECK(common_period(MotionSpec{0.0, 1.0, 0, 0, 1.0 / 3.0}, RationalRatio(2, 1)) == doctest::Approx(3 * kPi));
  CHECK(common_period(MotionSpec{1.0, 2.0, 0, 0, 1.0}, RationalRatio(1, 0)) == doctest::Approx(kPi));
}

TEST_CASE("hamilton field") {
  const PhasePoint zero = hamilton_field({0, 0, 0, 0}, 0.3);
  CHECK(distance(zero, {0, 0, 0, 0}) == 0.0);
  const PhasePoint ho = hamilton_field({1.0, 2.0, 3.0, 4.0}, 0.0);
  CHECK(distance(ho, {3.0, 4.0, -1.0, -2.0}) == 0.0);

  // field = symplectic gradient of h, checked by central differences
  const double g = 1.0 / 3.0, h = 1e-6;
  for (const PhasePoint& pt : random_points(10, 4)) {
    const PhasePoint f = hamilton_field(pt, g);
    auto dh = [&](int k) {
      PhasePoint a = pt, b = pt;
      double* pa[] = {&a.x, &a.y, &a.px, &a.py};
      double* pb[] = {&b.x, &b.y, &b.px, &b.py};
      *pa[k] += h;
      *pb[k] -= h;
      return (hamiltonian(a, g) - hamiltonian(b, g)) / (2 * h);
    };
    CHECK(f.x == doctest::Approx(dh(2)));
    CHECK(f.y == doctest::Approx(dh(3)));
    CHECK(f.px == doctest::Approx(-dh(0)));
    CHECK(f.py == doctest::Approx(-dh(1)));
  }
}

TEST_CASE("RK4 against the analytic motion") {
  for (const auto& [spec, ratio] : {std::pair{kLeft, RationalRatio(2, 1)}, {kCenter, RationalRatio(5, 1)}, {kRight, RationalRatio(3, 2)}}) {
    const double T = common_period(spec, ratio);
    const Trajectory traj = integrate_hamilton(evolve(spec, 0.0), spec.gamma, T, 1e-3, 100);
    double sup = 0.0;
    for (std::size_t i = 0; i < traj.t.size(); ++i) sup = std::max(sup, distance(traj.points[i], evolve(spec, traj.t[i])));
    CHECK(sup < 1e-6);
    CHECK(traj.t.back() == doctest::Approx(T));
  }
}

TEST_CASE("Poisson brackets") {
  for (auto [p, q] : {std::pair{1, 1}, {2, 1}, {3, 2}}) {
    const auto pts = random_points(20, 5 + p);
    const Report r = bracket_algebra_check(RationalRatio(p, q), pts);
    CHECK_MESSAGE(r.all_passed(), r.to_json());
  }
  const std::vector<PhasePoint> origin{{0, 0, 0, 0}};
  CHECK_THROWS_AS(bracket_algebra_check(RationalRatio(1, 1), origin), DomainError);
}

TEST_CASE("sample trajectory") {
  const auto rows = sample_trajectory(kLeft, RationalRatio(2, 1), 3 * kPi, 0.01);
  REQUIRE(rows.size() > 900);
  for (const auto& r : rows) {
    CHECK(r.eps == doctest::Approx(264.0));
    CHECK(r.ell == doctest::Approx(96.0));
  }
  CHECK(rows.front().abs_s == doctest::Approx(rows.back().abs_s));
}
