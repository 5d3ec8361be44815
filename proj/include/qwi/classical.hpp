#pragma once

#include <vector>

#include "qwi/bound_state.hpp"
#include "qwi/potential.hpp"
#include "qwi/roots.hpp"

// Direct matching of the region solutions for the three-region well
// U1 (x <= 0), U2 (0 < x < a), U3 (x > a):
//   psi1 = C11 exp(k1 x),  psi2 = C21 cos(k2 x) + C22 sin(k2 x),  psi3 = C32 exp(-k3 x)
// with k1, k3 the decay constants and k2 the in-well wavenumber.

namespace qwi::classical {

/// Decay constants and in-well wavenumber at one energy inside the bound-state window.
struct WellWaves {
  double kappa1 = 0.0;
  double k2 = 0.0;
  double kappa3 = 0.0;
  double width = 0.0;
};

/// Throws UnsupportedProfileError unless the profile has exactly three regions,
/// and DomainError unless U2 < E < min(U1, U3).
WellWaves well_waves(const PotentialProfile& profile, const UnitSystem& units, double energy);

struct MatchingCoefficients {
  double c11 = 0.0;
  double c21 = 0.0;
  double c22 = 0.0;
  double c32 = 0.0;
};

/// f(E) = k2 (k1 + k3) cos(k2 a) + (k1 k3 - k2^2) sin(k2 a).
///
/// Pole-free: its zeros are the bound-state energies.
double dispersion_residual(const PotentialProfile& profile, const UnitSystem& units,
                           double energy);

/// |k2 (k1 + k3)| + |k1 k3 - k2^2|, the magnitude f is measured against.
double dispersion_scale(const PotentialProfile& profile, const UnitSystem& units, double energy);

/// Roots of dispersion_residual in (U2, min(U1, U3)), ascending, with normalization
/// and phase filled in. An empty window gives an empty list.
std::vector<BoundState> find_bound_states(const PotentialProfile& profile,
                                          const UnitSystem& units,
                                          int resolution = kDefaultResolution);

/// Coefficients for a given C11 (C12 = C31 = 0 by the decay conditions).
MatchingCoefficients matching_coefficients(const PotentialProfile& profile,
                                           const UnitSystem& units, double energy,
                                           double c11 = 1.0);

/// 1/|C11|^2 = 1/(2k1) + sin(2k2a)(1 - k1^2/k2^2)/(4k2) - k1 cos(2k2a)/(2k2^2)
///            + (a + k1^2 a/k2^2 + k1/k2^2)/2 + [cos(k2a) + (k1/k2) sin(k2a)]^2/(2k3),
/// the term-by-term integral of |psi|^2/|C11|^2. Valid at any energy in the window.
double inverse_norm_integral_form(const PotentialProfile& profile, const UnitSystem& units,
                                  double energy);

/// 1/|C11|^2 = (1 + k1^2/k2^2)(a + (k1 + k3)/(k1 k3))/2. Holds only at roots.
double inverse_norm_closed_form(const PotentialProfile& profile, const UnitSystem& units,
                                double energy);

/// |C11|^2 from the closed form. Throws InconsistentStateError if E is not a root.
double normalization(const PotentialProfile& profile, const UnitSystem& units, double energy);

/// Phase with cos(phi) = 1/sqrt(1 + k1^2/k2^2), sin(phi) = -(k1/k2)/sqrt(1 + k1^2/k2^2).
double phase(const PotentialProfile& profile, const UnitSystem& units, double energy);

/// Normalized psi(x), C11 > 0.
double wavefunction(const PotentialProfile& profile, const UnitSystem& units,
                    const BoundState& state, double x);

/// d psi / dx of the normalized state.
double wavefunction_derivative(const PotentialProfile& profile, const UnitSystem& units,
                               const BoundState& state, double x);

}  // namespace qwi::classical
