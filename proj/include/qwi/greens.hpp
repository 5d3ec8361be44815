#pragma once

#include <span>
#include <utility>
#include <vector>

#include "qwi/potential.hpp"

// Diagonal Green's function of the three-region well from the impedances seen on either side
// of the source point. Inside the well the left- and right-boundary impedances are
//   Z_left(x)  = -z2 tanh(i k2 x + phi_L),   Z_right(x) = -z2 tanh(i k2 x + phi_R),
// and G(x, x, E) = (2/hbar) / (Z_left - Z_right), with Im G(x, x, E_n - i eps) > 0.

namespace qwi::greens {

inline const std::vector<double> kDefaultEpsSchedule{1e-4, 1e-5, 1e-6, 1e-7};

struct SideImpedances {
  cplx left;
  cplx right;
};

/// Throws DomainError unless 0 < x < a and Im E <= 0, PoleError at a tanh pole.
SideImpedances side_impedances(const PotentialProfile& profile, const UnitSystem& units,
                               double x, cplx energy);

/// G(x, x, E). Throws PoleError when Z_left == Z_right (a real eigenvalue).
cplx green_diagonal(const PotentialProfile& profile, const UnitSystem& units, double x,
                    cplx energy);

/// (2/hbar) / (z_a - z_b) for an arbitrary pair of side impedances.
cplx green_from_impedances(const UnitSystem& units, cplx z_a, cplx z_b);

/// Everything known about one evaluation point.
struct GreensProbe {
  double x = 0.0;
  cplx energy;
  cplx z_left;
  cplx z_right;
  std::pair<double, double> interval{0.0, 0.0};
  cplx green;
};

GreensProbe probe(const PotentialProfile& profile, const UnitSystem& units, double x,
                  cplx energy);

/// eps * Im G(x, x, E_n - i eps) for one eps.
double density_at_eps(const PotentialProfile& profile, const UnitSystem& units, double x,
                      double energy, double eps);

/// |psi_n(x)|^2 from the eps -> 0 limit, two-point Richardson extrapolated along the schedule.
/// The schedule must be strictly decreasing and positive. Throws ConvergenceError when
/// successive extrapolants differ by more than 1e-4 relative, and InconsistentStateError
/// when E_n is not a bound state.
double eigenfunction_density(const PotentialProfile& profile, const UnitSystem& units, double x,
                             double energy, std::span<const double> eps_schedule);
double eigenfunction_density(const PotentialProfile& profile, const UnitSystem& units, double x,
                             double energy);

}  // namespace qwi::greens
