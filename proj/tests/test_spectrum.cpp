#include <doctest.h>

#include <cmath>
#include <map>
#include <numbers>
#include <set>

#include "fockdarwin/errors.hpp"
#include "fockdarwin/numerics.hpp"
#include "fockdarwin/spectrum.hpp"

using namespace fockdarwin;
using cplx = std::complex<double>;

TEST_CASE("energy values") {
  CHECK(energy({0, 0}, 0.37) == 1.0);
  CHECK(energy({2, 3}, 0.0) == 6.0);
  for (int n = 0; n < 10; ++n) CHECK(energy({1, n}, 1.0) == 3.0);
  CHECK(energy({1, 0}, 1.0 / 3.0) == doctest::Approx(7.0 / 3.0));
}

TEST_CASE("energy_lp agrees with energy") {
  const double omega = 2.5;
  for (double gamma : {0.0, 0.2, 1.0 / 3.0, -0.6}) {
    const double omega_c = 2.0 * gamma * omega;
    for (int m = 0; m < 6; ++m) {
      for (int n = 0; n < 6; ++n) {
        const QuantumLabel s{m, n};
        CHECK(energy_lp(s.ell(), s.radial(), omega, omega_c) == doctest::Approx(energy(s, gamma) * omega));
      }
    }
  }
  CHECK(energy_lp(0, 0, 1.7, 0.4) == doctest::Approx(1.7));
  CHECK(energy_lp(2, 1, 1.0, 0.0) == 5.0);
}

TEST_CASE("multiplet_energy is exact") {
  const ExactEnergy e = multiplet_energy(2, RationalRatio(2, 1));
  CHECK(e.num * 3 == 7 * e.den);
  CHECK(multiplet_energy(0, RationalRatio(5, 1)).value() == 1.0);
}

TEST_CASE("levels (2,1)") {
  const auto levels = enumerate_levels(RationalRatio(2, 1), 4.0);
  REQUIRE(levels.size() >= 3);
  CHECK(levels[0].members == std::vector<QuantumLabel>{{0, 0}});
  CHECK(levels[1].members == std::vector<QuantumLabel>{{0, 1}});
  CHECK(levels[2].key == 2);
  CHECK(levels[2].degeneracy() == 2);
  CHECK(std::set<QuantumLabel>(levels[2].members.begin(), levels[2].members.end()) ==
        std::set<QuantumLabel>{{1, 0}, {0, 2}});
  CHECK(levels[2].energy.value() == doctest::Approx(7.0 / 3.0));
}

TEST_CASE("levels (1,1) degeneracy k+1") {
  const auto levels = enumerate_levels(RationalRatio(1, 1), 10.0);
  for (const auto& lvl : levels) CHECK(lvl.degeneracy() == static_cast<std::size_t>(lvl.key + 1));
  CHECK(std::set<QuantumLabel>(levels[3].members.begin(), levels[3].members.end()) ==
        std::set<QuantumLabel>{{3, 0}, {2, 1}, {1, 2}, {0, 3}});
}

TEST_CASE("levels agree with brute-force grouping") {
  for (auto [p, q] : {std::pair{2, 1}, {3, 2}, {5, 1}, {1, 2}, {4, 3}}) {
    const RationalRatio ratio(p, q);
    const double eps_max = 25.0;
    // (p+q) eps = 2pm + 2qn + p + q
    std::map<long, std::set<QuantumLabel>> brute;
    for (int m = 0; m <= 200; ++m) {
      for (int n = 0; n <= 200; ++n) {
        const long scaled = 2L * p * m + 2L * q * n + p + q;
        if (scaled <= eps_max * (p + q) + 1e-9) brute[scaled].insert({m, n});
      }
    }
    const auto levels = enumerate_levels(ratio, eps_max);
    REQUIRE(levels.size() == brute.size());
    auto it = brute.begin();
    for (const auto& lvl : levels) {
      CHECK(std::set<QuantumLabel>(lvl.members.begin(), lvl.members.end()) == it->second);
      for (const auto& s : lvl.members) CHECK(p * s.m + q * s.n == lvl.key);
      for (std::size_t i = 1; i < lvl.members.size(); ++i) {
        CHECK(lvl.members[i].m == lvl.members[i - 1].m - q);
        CHECK(lvl.members[i].n == lvl.members[i - 1].n + p);
      }
      ++it;
    }
  }
}

TEST_CASE("Landau limit has infinite degeneracy") {
  CHECK_THROWS_AS(enumerate_levels(RationalRatio(1, 0), 5.0), InfiniteDegeneracyError);
  CHECK_THROWS_AS(enumerate_levels(RationalRatio(0, 1), 5.0), InfiniteDegeneracyError);
}

TEST_CASE("sweep rows") {
  const std::vector<double> grid{-1.0, 0.0, 1.0 / 3.0, 1.0};
  const auto rows = sweep_levels(3, 3, grid, SweepAxis::Gamma);
  CHECK(rows.size() == 4 * 16);
  for (const auto& r : rows) CHECK(r.energy == doctest::Approx(energy({r.m, r.n}, r.gamma)));

  const auto b_rows = sweep_levels(1, 1, {0.0, 2.0}, SweepAxis::MagneticField);
  for (const auto& r : b_rows) {
    if (r.parameter == 0.0) CHECK(r.gamma == 0.0);
  }
}

TEST_CASE("eigenfunction values") {
  CHECK(eigenfunction({0, 0}, 1.0, 0.0).real() == doctest::Approx(std::exp(-0.5) / std::sqrt(std::numbers::pi)));
  CHECK(eigenfunction({0, 0}, 1.0, 0.0).real() == doctest::Approx(0.342200).epsilon(1e-5));
  CHECK(eigenfunction({2, 3}, 0.0, 1.0) == cplx(0.0));
}

TEST_CASE("eigenfunction orthonormality") {
  const Grid2D grid(12.0, 120, 64);
  const QuantumLabel labels[] = {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 3}, {4, 0}};
  for (const auto& a : labels) {
    for (const auto& b : labels) {
      const cplx ip =
          grid.integrate([&](double rho, double phi) { return std::conj(eigenfunction(a, rho, phi)) * eigenfunction(b, rho, phi); });
      CHECK(std::abs(ip - (a == b ? 1.0 : 0.0)) < 1e-8);
    }
  }
}

TEST_CASE("jet derivatives against finite differences") {
  for (const QuantumLabel s : {QuantumLabel{0, 0}, QuantumLabel{2, 1}, QuantumLabel{1, 4}}) {
    const double rho = 1.3, phi = 0.7, h = 1e-6;
    const WaveJet jet = eigenfunction_jet(s, rho, phi);
    const cplx d_rho = (eigenfunction(s, rho + h, phi) - eigenfunction(s, rho - h, phi)) / (2 * h);
    const cplx d_phi = (eigenfunction(s, rho, phi + h) - eigenfunction(s, rho, phi - h)) / (2 * h);
    CHECK(std::abs(jet.d_rho - d_rho) < 1e-8);
    CHECK(std::abs(jet.d_phi - d_phi) < 1e-8);
    CHECK(std::abs(-cplx(0, 1) * jet.d_phi - double(s.ell()) * jet.value) < 1e-14);
  }
}

TEST_CASE("ladder operators act on the basis") {
  for (int m = 0; m <= 3; ++m) {
    for (int n = 0; n <= 3; ++n) {
      const QuantumLabel s{m, n};
      for (double rho : {0.5, 1.7}) {
        for (double phi : {0.3, 2.2}) {
          const WaveJet jet = eigenfunction_jet(s, rho, phi);
          CHECK(std::abs(apply_ladder(Ladder::APlus, jet, rho, phi) - std::sqrt(m + 1.0) * eigenfunction({m + 1, n}, rho, phi)) <
                1e-10);
          CHECK(std::abs(apply_ladder(Ladder::BPlus, jet, rho, phi) - std::sqrt(n + 1.0) * eigenfunction({m, n + 1}, rho, phi)) <
                1e-10);
          const cplx am = m > 0 ? std::sqrt(double(m)) * eigenfunction({m - 1, n}, rho, phi) : 0.0;
          const cplx bm = n > 0 ? std::sqrt(double(n)) * eigenfunction({m, n - 1}, rho, phi) : 0.0;
          CHECK(std::abs(apply_ladder(Ladder::AMinus, jet, rho, phi) - am) < 1e-10);
          CHECK(std::abs(apply_ladder(Ladder::BMinus, jet, rho, phi) - bm) < 1e-10);
        }
      }
    }
  }
}
