#include "qwi/impedance.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "qwi/errors.hpp"

namespace qwi::impedance {

namespace {

constexpr cplx kI{0.0, 1.0};
constexpr double kRootCheckTol = 1e-8;

void require_three_region(const PotentialProfile& profile) {
  validate_profile(profile);
  if (!profile.is_three_region()) {
    throw UnsupportedProfileError("the impedance method handles three-region wells only (got " +
                                  std::to_string(profile.region_count()) + " regions)");
  }
}

void require_window(const PotentialProfile& profile, double energy) {
  const double lo = profile.values[1];
  const double hi = profile.threshold();
  if (!(energy > lo && energy < hi)) {
    std::ostringstream msg;
    msg << "energy " << energy << " outside the bound-state window (" << lo << ", " << hi << ")";
    throw DomainError(msg.str());
  }
}

struct Cleared {
  cplx value;  // z2 * num + z1 * den
  double scale;
};

Cleared cleared_condition(const PotentialProfile& profile, const UnitSystem& units,
                          double energy) {
  require_three_region(profile);
  validate_units(units);
  require_window(profile, energy);
  const auto w1 = wavenumber(profile, units, 0, energy);
  const auto w2 = wavenumber(profile, units, 1, energy);
  const auto w3 = wavenumber(profile, units, 2, energy);
  const cplx z1 = characteristic_impedance(w1, units).value;
  const cplx z2 = characteristic_impedance(w2, units).value;
  const cplx z3 = characteristic_impedance(w3, units).value;
  const cplx arg = w2.exponent() * profile.region_width(1);
  const cplx ch = std::cosh(arg);
  const cplx sh = std::sinh(arg);
  const cplx num = z3 * ch + z2 * sh;
  const cplx den = z2 * ch + z3 * sh;
  const double scale = std::abs(z2) * (std::abs(z3 * ch) + std::abs(z2 * sh)) +
                       std::abs(z1) * (std::abs(z2 * ch) + std::abs(z3 * sh));
  return {z2 * num + z1 * den, scale};
}

}  // namespace

CharacteristicImpedance characteristic_impedance(const RegionWaveNumber& wave,
                                                 const UnitSystem& units) {
  if (!(wave.magnitude > 0.0)) {
    throw DegenerateWavenumberError("characteristic impedance of a zero wavenumber");
  }
  return {units.hbar * wave.exponent() / units.mass, wave.kind};
}

cplx input_impedance(const CharacteristicImpedance& z0, cplx z_load, cplx exponent,
                     double length) {
  const cplx arg = exponent * length;
  cplx num;
  cplx den;
  if (std::abs(arg.real()) > 20.0) {
    // cosh and sinh overflow together; divide both through by cosh.
    const cplx t = std::tanh(arg);
    num = z_load + z0.value * t;
    den = z0.value + z_load * t;
  } else {
    const cplx ch = std::cosh(arg);
    const cplx sh = std::sinh(arg);
    num = z_load * ch + z0.value * sh;
    den = z0.value * ch + z_load * sh;
  }
  const double scale = std::abs(z0.value) * std::abs(num);
  if (std::abs(den) <= 1e-30 * scale || den == cplx(0.0, 0.0)) {
    throw PoleError("input impedance has a pole at this length and load");
  }
  return z0.value * num / den;
}

cplx input_impedance(const CharacteristicImpedance& z0, cplx z_load,
                     const RegionWaveNumber& wave, double length) {
  return input_impedance(z0, z_load, wave.exponent(), length);
}

ComplexWellWaves complex_well_waves(const PotentialProfile& profile, const UnitSystem& units,
                                    cplx energy) {
  require_three_region(profile);
  validate_units(units);
  const double two_m = 2.0 * units.mass;
  ComplexWellWaves w;
  w.kappa1 = std::sqrt(two_m * (profile.values[0] - energy)) / units.hbar;
  w.k2 = std::sqrt(two_m * (energy - profile.values[1])) / units.hbar;
  w.kappa3 = std::sqrt(two_m * (profile.values[2] - energy)) / units.hbar;
  w.width = profile.region_width(1);
  if (w.kappa1 == 0.0 || w.k2 == 0.0 || w.kappa3 == 0.0) {
    throw DegenerateWavenumberError("energy equals a region level");
  }
  return w;
}

double bound_state_residual_imp(const PotentialProfile& profile, const UnitSystem& units,
                                double energy) {
  const double m_over_hbar = units.mass / units.hbar;
  return cleared_condition(profile, units, energy).value.imag() * m_over_hbar * m_over_hbar;
}

std::vector<BoundState> find_bound_states(const PotentialProfile& profile,
                                          const UnitSystem& units, int resolution) {
  require_three_region(profile);
  validate_units(units);
  if (resolution < 2) {
    throw DomainError("bracketing resolution must be at least 2");
  }
  const double lo = profile.values[1];
  const double hi = profile.threshold();
  std::vector<BoundState> states;
  if (!(hi > lo)) {
    return states;
  }
  const auto g = [&](double e) { return bound_state_residual_imp(profile, units, e); };
  const auto roots = bracket_roots(g, lo, hi, resolution);
  states.reserve(roots.size());
  for (double e : roots) {
    const auto w = complex_well_waves(profile, units, e);
    const double k1 = w.kappa1.real();
    const double k3 = w.kappa3.real();
    BoundState s;
    s.energy = e;
    s.method = Method::impedance;
    s.index = static_cast<int>(states.size());
    s.residual = g(e);
    s.norm_constant = 2.0 / (w.width + (k1 + k3) / (k1 * k3));
    s.phase = real_phase(phases(profile, units, e));
    states.push_back(s);
  }
  return states;
}

PhasePair phases(const PotentialProfile& profile, const UnitSystem& units, cplx energy) {
  const auto w = complex_well_waves(profile, units, energy);
  PhasePair p;
  p.phi_left = -0.5 * std::log((kI * w.kappa1 + w.k2) / (w.k2 - kI * w.kappa1));
  p.phi_right = -0.5 * std::log(std::exp(2.0 * kI * w.k2 * w.width) * (w.k2 - kI * w.kappa3) /
                                (w.k2 + kI * w.kappa3));
  return p;
}

PhasePair phases(const PotentialProfile& profile, const UnitSystem& units, double energy) {
  require_three_region(profile);
  require_window(profile, energy);
  return phases(profile, units, cplx(energy, 0.0));
}

double phase_mismatch(const PhasePair& p) {
  const cplx d = p.phi_left - p.phi_right;
  const double wrapped = std::remainder(d.imag(), std::numbers::pi);
  return std::hypot(d.real(), wrapped);
}

double real_phase(const PhasePair& p) { return p.phi_left.imag(); }

double well_density(const PotentialProfile& profile, const UnitSystem& units,
                    const BoundState& state, double x) {
  const auto cleared = cleared_condition(profile, units, state.energy);
  if (std::abs(cleared.value.imag()) > kRootCheckTol * cleared.scale) {
    std::ostringstream msg;
    msg << "energy " << state.energy << " does not satisfy Z_in = -z1";
    throw InconsistentStateError(msg.str());
  }
  const double a = profile.region_width(1);
  if (!(x >= 0.0 && x <= a)) {
    std::ostringstream msg;
    msg << "x = " << x << " lies outside the well [0, " << a << "]";
    throw DomainError(msg.str());
  }
  const auto w = complex_well_waves(profile, units, state.energy);
  const double k1 = w.kappa1.real();
  const double k2 = w.k2.real();
  const double k3 = w.kappa3.real();
  const double phi = real_phase(phases(profile, units, state.energy));
  const double c = std::cos(k2 * x + phi);
  return 2.0 / (a + (k1 + k3) / (k1 * k3)) * c * c;
}

}  // namespace qwi::impedance
