#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "qwi/classical.hpp"
#include "qwi/errors.hpp"
#include "qwi/greens.hpp"
#include "qwi/impedance.hpp"
#include "support/oracles.hpp"

using namespace qwi;
namespace t = qwi::testing;

namespace {

const PotentialProfile kWell = PotentialProfile::three_region(5.0, -10.0, 8.0, 2.0);

}  // namespace

TEST_SUITE("greens") {

TEST_CASE("side impedances solve the Riccati equation") {
  // Z = -(hbar/m) psi'/psi  =>  dZ/dx = (m/hbar) Z^2 + 2 (E - U) / hbar.
  const UnitSystem units{1.3, 0.7};
  const cplx e(-4.0, -0.05);
  const double u2 = -10.0, h = 1e-5;
  for (double x : {0.3, 0.9, 1.6}) {
    const auto lo = greens::side_impedances(kWell, units, x - h, e);
    const auto mid = greens::side_impedances(kWell, units, x, e);
    const auto hi = greens::side_impedances(kWell, units, x + h, e);
    for (auto pick : {&greens::SideImpedances::left, &greens::SideImpedances::right}) {
      const cplx dz = (hi.*pick - lo.*pick) / (2 * h);
      const cplx rhs = units.mass / units.hbar * (mid.*pick) * (mid.*pick) +
                       2.0 * (e - u2) / units.hbar;
      CHECK(std::abs(dz - rhs) < 1e-6 * std::abs(rhs));
    }
  }
}

TEST_CASE("side impedances meet the outer loads at the well edges") {
  const double e = -4.0;
  const auto w = t::waves(kWell, {}, e);
  const auto near0 = greens::side_impedances(kWell, {}, 1e-10, e);
  const auto near_a = greens::side_impedances(kWell, {}, 2.0 - 1e-10, e);
  CHECK(std::abs(near0.left - cplx(-w.kappa1)) < 1e-8);
  CHECK(std::abs(near_a.right - cplx(w.kappa3)) < 1e-8);
}

TEST_CASE("diagonal G from the two impedances") {
  const cplx e(-4.0, -0.01);
  for (double x : {0.2, 1.0, 1.7}) {
    const auto p = greens::probe(kWell, {}, x, e);
    CHECK(t::rel_err(p.green, greens::green_from_impedances({}, p.z_left, p.z_right)) < 1e-10);
    CHECK(p.interval.second == 2.0);
  }
  CHECK_THROWS_AS(greens::green_from_impedances({}, 1.0, 1.0), PoleError);
}

TEST_CASE("poles and domain") {
  const auto s = classical::find_bound_states(kWell, {}).front();
  CHECK_THROWS_AS(greens::green_diagonal(kWell, {}, 1.0, s.energy), PoleError);
  CHECK_THROWS_AS(greens::green_diagonal(kWell, {}, 0.0, cplx(-4.0, -0.1)), DomainError);
  CHECK_THROWS_AS(greens::green_diagonal(kWell, {}, 2.5, cplx(-4.0, -0.1)), DomainError);
  CHECK_THROWS_AS(greens::green_diagonal(kWell, {}, 1.0, cplx(-4.0, 0.1)), DomainError);
}

TEST_CASE("Im G is positive just below each eigenvalue and eps Im G tends to |psi|^2") {
  for (const auto& s : classical::find_bound_states(kWell, {})) {
    for (double x : {0.37, 1.21}) {
      const double psi = classical::wavefunction(kWell, {}, s, x);
      const cplx g = greens::green_diagonal(kWell, {}, x, cplx(s.energy, -1e-6));
      CHECK(g.imag() > 0.0);
      const double d4 = greens::density_at_eps(kWell, {}, x, s.energy, 1e-4);
      const double d6 = greens::density_at_eps(kWell, {}, x, s.energy, 1e-6);
      CHECK(std::abs(d6 - psi * psi) < std::abs(d4 - psi * psi) + 1e-12);
      CHECK(std::abs(d6 - psi * psi) < 1e-5);
    }
  }
}

TEST_CASE("extrapolated density matches quadrature-normalized |psi|^2 and the closed form") {
  t::Gen g(51);
  for (int i = 0; i < 6; ++i) {
    const auto p = t::random_well(g);
    const double a = p.boundaries[1];
    for (const auto& s : impedance::find_bound_states(p, {})) {
      const auto w = t::waves(p, {}, s.energy);
      const double phi = -std::atan(w.kappa1 / w.k2);
      const double closed_norm = 2.0 / (a + (w.kappa1 + w.kappa3) / (w.kappa1 * w.kappa3));
      for (int k = 1; k < 40; ++k) {
        const double x = a * k / 40.0;
        const double rho = greens::eigenfunction_density(p, {}, x, s.energy);
        const double psi = t::reference_psi(w, x);
        CHECK(std::abs(rho - psi * psi) < 1e-6);
        const double c = std::cos(w.k2 * x + phi);
        CHECK(std::abs(rho - closed_norm * c * c) < 1e-6);
      }
    }
  }
}

TEST_CASE("slopes of the side impedances in eps") {
  // Left slope has arg -pi/2, right slope +pi/2; their sizes at the edges are 1/(hbar kappa).
  const UnitSystem units{1.0, 1.0};
  for (const auto& s : classical::find_bound_states(kWell, units)) {
    const auto w = t::waves(kWell, units, s.energy);
    const double de = 1e-7;
    for (double x : {0.3, 1.1, 1.8}) {
      const auto z0 = greens::side_impedances(kWell, units, x, s.energy);
      const auto z1 = greens::side_impedances(kWell, units, x, cplx(s.energy, -de));
      const cplx dl = (z1.left - z0.left) / de;
      const cplx dr = (z1.right - z0.right) / de;
      CHECK(std::arg(dl) == doctest::Approx(-std::numbers::pi / 2).epsilon(1e-4));
      CHECK(std::arg(dr) == doctest::Approx(std::numbers::pi / 2).epsilon(1e-4));
    }
    const auto e0 = greens::side_impedances(kWell, units, 1e-9, s.energy);
    const auto e1 = greens::side_impedances(kWell, units, 1e-9, cplx(s.energy, -de));
    CHECK(std::abs((e1.left - e0.left) / de) == doctest::Approx(1.0 / w.kappa1).epsilon(1e-4));
    const auto f0 = greens::side_impedances(kWell, units, 2.0 - 1e-9, s.energy);
    const auto f1 = greens::side_impedances(kWell, units, 2.0 - 1e-9, cplx(s.energy, -de));
    CHECK(std::abs((f1.right - f0.right) / de) == doctest::Approx(1.0 / w.kappa3).epsilon(1e-4));
  }
}

TEST_CASE("schedule and state checks") {
  const auto s = classical::find_bound_states(kWell, {}).front();
  const std::vector<double> one{1e-5};
  const std::vector<double> rising{1e-6, 1e-5};
  CHECK_THROWS_AS(greens::eigenfunction_density(kWell, {}, 1.0, s.energy, one), DomainError);
  CHECK_THROWS_AS(greens::eigenfunction_density(kWell, {}, 1.0, s.energy, rising), DomainError);
  CHECK_THROWS_AS(greens::eigenfunction_density(kWell, {}, 1.0, -5.0), InconsistentStateError);
  const std::vector<double> custom{1e-3, 1e-4, 1e-5};
  CHECK(greens::eigenfunction_density(kWell, {}, 1.0, s.energy, custom) ==
        doctest::Approx(greens::eigenfunction_density(kWell, {}, 1.0, s.energy)).epsilon(1e-6));
}

}
