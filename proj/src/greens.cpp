#include "qwi/greens.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qwi/errors.hpp"
#include "qwi/impedance.hpp"

namespace qwi::greens {

namespace {

constexpr cplx kI{0.0, 1.0};

struct WellPoint {
  cplx z2;
  cplx s_left;   // i k2 x + phi_L
  cplx s_right;  // i k2 x + phi_R
  cplx phase_gap;
};

WellPoint well_point(const PotentialProfile& profile, const UnitSystem& units, double x,
                     cplx energy) {
  const auto w = impedance::complex_well_waves(profile, units, energy);
  if (!(x > 0.0 && x < w.width)) {
    std::ostringstream msg;
    msg << "x = " << x << " is not strictly inside the well (0, " << w.width << ")";
    throw DomainError(msg.str());
  }
  if (energy.imag() > 0.0) {
    throw DomainError("the Green's function is evaluated at E - i eps with eps >= 0");
  }
  const auto p = impedance::phases(profile, units, energy);
  WellPoint pt;
  pt.z2 = units.hbar * kI * w.k2 / units.mass;
  pt.s_left = kI * w.k2 * x + p.phi_left;
  pt.s_right = kI * w.k2 * x + p.phi_right;
  pt.phase_gap = p.phi_left - p.phi_right;
  return pt;
}

cplx side(const cplx& z2, const cplx& s) {
  const cplx c = std::cosh(s);
  if (std::abs(c) < 1e-300 || std::abs(c) < 1e-14 * std::abs(std::sinh(s))) {
    throw PoleError("side impedance has a pole at this point; perturb x");
  }
  return -z2 * std::sinh(s) / c;
}

}  // namespace

SideImpedances side_impedances(const PotentialProfile& profile, const UnitSystem& units,
                               double x, cplx energy) {
  const auto pt = well_point(profile, units, x, energy);
  return {side(pt.z2, pt.s_left), side(pt.z2, pt.s_right)};
}

cplx green_from_impedances(const UnitSystem& units, cplx z_a, cplx z_b) {
  const cplx gap = z_a - z_b;
  if (gap == cplx(0.0, 0.0)) {
    throw PoleError("equal side impedances: the energy is an eigenvalue");
  }
  return 2.0 / units.hbar / gap;
}

cplx green_diagonal(const PotentialProfile& profile, const UnitSystem& units, double x,
                    cplx energy) {
  const auto pt = well_point(profile, units, x, energy);
  // Z_left - Z_right = -z2 sinh(phi_L - phi_R) / (cosh s_L cosh s_R); written this way the
  // nodes of psi (poles of both side impedances) need no special treatment.
  const cplx gap = std::sinh(pt.phase_gap);
  const bool real_energy = energy.imag() == 0.0;
  if (gap == cplx(0.0, 0.0) || (real_energy && std::abs(gap) < 1e-9)) {
    throw PoleError("Z_left == Z_right: the Green's function has a pole at this energy");
  }
  return -2.0 / units.hbar * std::cosh(pt.s_left) * std::cosh(pt.s_right) / (pt.z2 * gap);
}

GreensProbe probe(const PotentialProfile& profile, const UnitSystem& units, double x,
                  cplx energy) {
  GreensProbe out;
  const auto sides = side_impedances(profile, units, x, energy);
  out.x = x;
  out.energy = energy;
  out.z_left = sides.left;
  out.z_right = sides.right;
  out.interval = {0.0, profile.region_width(1)};
  out.green = green_diagonal(profile, units, x, energy);
  return out;
}

double density_at_eps(const PotentialProfile& profile, const UnitSystem& units, double x,
                      double energy, double eps) {
  return eps * green_diagonal(profile, units, x, cplx(energy, -eps)).imag();
}

double eigenfunction_density(const PotentialProfile& profile, const UnitSystem& units, double x,
                             double energy, std::span<const double> eps_schedule) {
  if (eps_schedule.size() < 2) {
    throw DomainError("the eps schedule needs at least two values");
  }
  for (std::size_t i = 0; i < eps_schedule.size(); ++i) {
    if (!(eps_schedule[i] > 0.0) || (i > 0 && !(eps_schedule[i] < eps_schedule[i - 1]))) {
      throw DomainError("the eps schedule must be positive and strictly decreasing");
    }
  }
  const auto p = impedance::phases(profile, units, energy);
  if (impedance::phase_mismatch(p) > 1e-6) {
    std::ostringstream msg;
    msg << "energy " << energy << " is not a bound state (phase mismatch "
        << impedance::phase_mismatch(p) << ")";
    throw InconsistentStateError(msg.str());
  }

  std::vector<double> raw(eps_schedule.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    raw[i] = density_at_eps(profile, units, x, energy, eps_schedule[i]);
  }
  // Linear-in-eps Richardson on consecutive pairs.
  std::vector<double> extrapolated(raw.size() - 1);
  for (std::size_t i = 0; i + 1 < raw.size(); ++i) {
    const double e0 = eps_schedule[i];
    const double e1 = eps_schedule[i + 1];
    extrapolated[i] = (e0 * raw[i + 1] - e1 * raw[i]) / (e0 - e1);
  }
  // Density scale of the well, used as an absolute floor near nodes.
  const double floor = 1e-8 / profile.region_width(1);
  for (std::size_t i = 1; i < extrapolated.size(); ++i) {
    const double a = extrapolated[i - 1];
    const double b = extrapolated[i];
    if (std::abs(a - b) > 1e-4 * std::max(std::abs(a), std::abs(b)) + floor) {
      std::ostringstream msg;
      msg << "eps extrapolation did not converge at x = " << x << " (" << a << " vs " << b
          << ")";
      throw ConvergenceError(msg.str());
    }
  }
  return extrapolated.back();
}

double eigenfunction_density(const PotentialProfile& profile, const UnitSystem& units, double x,
                             double energy) {
  return eigenfunction_density(profile, units, x, energy, kDefaultEpsSchedule);
}

}  // namespace qwi::greens
