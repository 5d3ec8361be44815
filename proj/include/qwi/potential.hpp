#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace qwi {

using cplx = std::complex<double>;

/// Action scale and particle mass. Both default to 1 (dimensionless units).
struct UnitSystem {
  double hbar = 1.0;
  double mass = 1.0;
};

/// Piecewise-constant potential on the real line.
///
/// `boundaries` holds the N-1 interface positions x_0 < ... < x_{N-2};
/// `values` holds the N region levels. Region 0 is (-inf, x_0] and region
/// N-1 is (x_{N-2}, +inf); both are semi-infinite.
struct PotentialProfile {
  std::vector<double> boundaries;
  std::vector<double> values;

  /// The asymmetric finite well: U1 for x <= 0, U2 on (0, a), U3 for x > a.
  static PotentialProfile three_region(double u1, double u2, double u3, double width);

  std::size_t region_count() const { return values.size(); }
  bool is_three_region() const { return values.size() == 3 && boundaries.size() == 2; }

  /// Width of an interior region. Outer regions have no finite width.
  double region_width(std::size_t region) const;

  /// Index of the region containing x (a point on an interface belongs to the left region).
  std::size_t region_at(double x) const;

  double potential_at(double x) const { return values[region_at(x)]; }

  /// Asymptotic threshold min(U_first, U_last); bound states lie strictly below it.
  double threshold() const;
  double minimum() const;

  bool operator==(const PotentialProfile&) const = default;
};

enum class WaveKind { propagating, evanescent };

/// Wavenumber of one region at a given energy.
///
/// `magnitude` is k (propagating, E > U) or kappa (evanescent, E < U).
struct RegionWaveNumber {
  WaveKind kind = WaveKind::propagating;
  double magnitude = 0.0;

  /// q with solutions exp(+-i q x): k when propagating, i*kappa when evanescent.
  cplx complex_value() const;

  /// Rate p with solutions exp(+-p x): i*k when propagating, kappa when evanescent.
  /// This is the form used by the transfer matrices and the impedances.
  cplx exponent() const;
};

void validate_units(const UnitSystem& units);

/// Throws ValidationError describing the first violated invariant.
void validate_profile(const PotentialProfile& profile);

/// sqrt(2m|E-U|)/hbar for region `region`; throws DegenerateWavenumberError when E == U.
RegionWaveNumber wavenumber(const PotentialProfile& profile, const UnitSystem& units,
                            std::size_t region, double energy);

}  // namespace qwi
