#pragma once

#include <vector>

#include "qwi/bound_state.hpp"
#include "qwi/potential.hpp"
#include "qwi/roots.hpp"

// Quantum wave impedance of the three-region well, oriented as Z = -(hbar/m) psi'/psi.
// With this orientation a region with exponent rate q (kappa or i*k) has characteristic
// impedance z = hbar q / m, the load seen from the well is z3, and a state decaying to the
// left presents -z1 at x = 0.

namespace qwi::impedance {

struct CharacteristicImpedance {
  cplx value;
  WaveKind region_kind = WaveKind::evanescent;
};

/// hbar kappa/m (evanescent, real positive) or i hbar k/m (propagating, imaginary).
CharacteristicImpedance characteristic_impedance(const RegionWaveNumber& wave,
                                                 const UnitSystem& units);

/// Impedance at the near end of a uniform region of length L terminated by z_load:
///   Z_in = z0 (z_load cosh(qL) + z0 sinh(qL)) / (z0 cosh(qL) + z_load sinh(qL)).
/// For a propagating region (q = ik) this is the transmission-line form
/// z0 (z_load cos(kL) + i z0 sin(kL)) / (z0 cos(kL) + i z_load sin(kL)).
/// Throws PoleError when the denominator vanishes.
cplx input_impedance(const CharacteristicImpedance& z0, cplx z_load, cplx exponent,
                     double length);
cplx input_impedance(const CharacteristicImpedance& z0, cplx z_load,
                     const RegionWaveNumber& wave, double length);

/// Wavenumbers of the well continued to complex energy. Principal square roots, so
/// Re kappa >= 0 and Re k2 >= 0. For real E they are the usual kappa1, k2, kappa3.
struct ComplexWellWaves {
  cplx kappa1;
  cplx k2;
  cplx kappa3;
  double width = 0.0;
};

ComplexWellWaves complex_well_waves(const PotentialProfile& profile, const UnitSystem& units,
                                    cplx energy);

/// Im(z2 * num + z1 * den) * (m/hbar)^2 where Z_in = z2 num/den; zero iff Z_in = -z1.
/// Equal to the classical dispersion residual.
double bound_state_residual_imp(const PotentialProfile& profile, const UnitSystem& units,
                                double energy);

std::vector<BoundState> find_bound_states(const PotentialProfile& profile,
                                          const UnitSystem& units,
                                          int resolution = kDefaultResolution);

/// phi_L = -1/2 Log((i kappa1 + k2)/(k2 - i kappa1)),
/// phi_R = -1/2 Log(exp(2 i k2 a)(k2 - i kappa3)/(k2 + i kappa3)), principal branch.
struct PhasePair {
  cplx phi_left;
  cplx phi_right;
};

PhasePair phases(const PotentialProfile& profile, const UnitSystem& units, double energy);
PhasePair phases(const PotentialProfile& profile, const UnitSystem& units, cplx energy);

/// Distance of phi_L - phi_R from the lattice i*pi*Z. Zero at a bound state.
double phase_mismatch(const PhasePair& p);

/// Real phase of the in-well cosine: Im(phi_L), which equals the classical phase.
double real_phase(const PhasePair& p);

/// 2 (a + (kappa1 + kappa3)/(kappa1 kappa3))^-1 cos^2(k2 x + phi) for 0 <= x <= a.
double well_density(const PotentialProfile& profile, const UnitSystem& units,
                    const BoundState& state, double x);

}  // namespace qwi::impedance
