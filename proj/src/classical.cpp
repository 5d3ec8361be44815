#include "qwi/classical.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qwi/errors.hpp"

namespace qwi {

std::string_view to_string(Method method) {
  switch (method) {
    case Method::classical:
      return "classical";
    case Method::transfer:
      return "transfer";
    case Method::impedance:
      return "impedance";
  }
  return "unknown";
}

}  // namespace qwi

namespace qwi::classical {

namespace {

constexpr double kRootCheckTol = 1e-8;

void require_three_region(const PotentialProfile& profile) {
  validate_profile(profile);
  if (!profile.is_three_region()) {
    throw UnsupportedProfileError("the classical method handles three-region wells only (got " +
                                  std::to_string(profile.region_count()) + " regions)");
  }
}

}  // namespace

WellWaves well_waves(const PotentialProfile& profile, const UnitSystem& units, double energy) {
  require_three_region(profile);
  validate_units(units);
  const double u2 = profile.values[1];
  const double top = profile.threshold();
  if (!(energy > u2 && energy < top)) {
    std::ostringstream msg;
    msg << "energy " << energy << " outside the bound-state window (" << u2 << ", " << top
        << ")";
    throw DomainError(msg.str());
  }
  WellWaves w;
  w.kappa1 = wavenumber(profile, units, 0, energy).magnitude;
  w.k2 = wavenumber(profile, units, 1, energy).magnitude;
  w.kappa3 = wavenumber(profile, units, 2, energy).magnitude;
  w.width = profile.region_width(1);
  return w;
}

double dispersion_residual(const PotentialProfile& profile, const UnitSystem& units,
                           double energy) {
  const auto w = well_waves(profile, units, energy);
  const double ka = w.k2 * w.width;
  return w.k2 * (w.kappa1 + w.kappa3) * std::cos(ka) +
         (w.kappa1 * w.kappa3 - w.k2 * w.k2) * std::sin(ka);
}

double dispersion_scale(const PotentialProfile& profile, const UnitSystem& units, double energy) {
  const auto w = well_waves(profile, units, energy);
  return std::abs(w.k2 * (w.kappa1 + w.kappa3)) + std::abs(w.kappa1 * w.kappa3 - w.k2 * w.k2);
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
  const auto f = [&](double e) { return dispersion_residual(profile, units, e); };
  const auto roots = bracket_roots(f, lo, hi, resolution);
  states.reserve(roots.size());
  for (double e : roots) {
    BoundState s;
    s.energy = e;
    s.method = Method::classical;
    s.index = static_cast<int>(states.size());
    s.residual = f(e);
    s.norm_constant = 1.0 / inverse_norm_closed_form(profile, units, e);
    s.phase = phase(profile, units, e);
    states.push_back(s);
  }
  return states;
}

MatchingCoefficients matching_coefficients(const PotentialProfile& profile,
                                           const UnitSystem& units, double energy, double c11) {
  const auto w = well_waves(profile, units, energy);
  const double ratio = w.kappa1 / w.k2;
  const double ka = w.k2 * w.width;
  MatchingCoefficients c;
  c.c11 = c11;
  c.c21 = c11;
  c.c22 = ratio * c11;
  c.c32 = c11 * std::exp(w.kappa3 * w.width) * (std::cos(ka) + ratio * std::sin(ka));
  return c;
}

double inverse_norm_integral_form(const PotentialProfile& profile, const UnitSystem& units,
                                  double energy) {
  const auto w = well_waves(profile, units, energy);
  const double k1 = w.kappa1;
  const double k2 = w.k2;
  const double k3 = w.kappa3;
  const double a = w.width;
  const double edge = std::cos(k2 * a) + (k1 / k2) * std::sin(k2 * a);
  return 1.0 / (2.0 * k1) + (1.0 - k1 * k1 / (k2 * k2)) * std::sin(2.0 * k2 * a) / (4.0 * k2) -
         k1 * std::cos(2.0 * k2 * a) / (2.0 * k2 * k2) +
         0.5 * (a + k1 * k1 * a / (k2 * k2) + k1 / (k2 * k2)) + edge * edge / (2.0 * k3);
}

double inverse_norm_closed_form(const PotentialProfile& profile, const UnitSystem& units,
                                double energy) {
  const auto w = well_waves(profile, units, energy);
  const double r = w.kappa1 / w.k2;
  return 0.5 * (1.0 + r * r) * (w.width + (w.kappa1 + w.kappa3) / (w.kappa1 * w.kappa3));
}

double normalization(const PotentialProfile& profile, const UnitSystem& units, double energy) {
  const double f = dispersion_residual(profile, units, energy);
  const double scale = dispersion_scale(profile, units, energy);
  if (std::abs(f) > kRootCheckTol * scale) {
    std::ostringstream msg;
    msg << "energy " << energy << " is not a bound state (|f| = " << std::abs(f)
        << ", scale " << scale << ")";
    throw InconsistentStateError(msg.str());
  }
  return 1.0 / inverse_norm_closed_form(profile, units, energy);
}

double phase(const PotentialProfile& profile, const UnitSystem& units, double energy) {
  const auto w = well_waves(profile, units, energy);
  return -std::atan2(w.kappa1, w.k2);
}

namespace {

struct Evaluated {
  double value;
  double slope;
};

Evaluated evaluate(const PotentialProfile& profile, const UnitSystem& units,
                   const BoundState& state, double x) {
  const auto w = well_waves(profile, units, state.energy);
  const double c11 = std::sqrt(normalization(profile, units, state.energy));
  const double ratio = w.kappa1 / w.k2;
  const double a = w.width;
  if (x < 0.0) {
    const double v = c11 * std::exp(w.kappa1 * x);
    return {v, w.kappa1 * v};
  }
  if (x <= a) {
    const double c = std::cos(w.k2 * x);
    const double s = std::sin(w.k2 * x);
    return {c11 * (c + ratio * s), c11 * w.k2 * (ratio * c - s)};
  }
  // C32 exp(-k3 x) written relative to x = a so the exponentials never overflow.
  const double edge = std::cos(w.k2 * a) + ratio * std::sin(w.k2 * a);
  const double v = c11 * edge * std::exp(-w.kappa3 * (x - a));
  return {v, -w.kappa3 * v};
}

}  // namespace

double wavefunction(const PotentialProfile& profile, const UnitSystem& units,
                    const BoundState& state, double x) {
  return evaluate(profile, units, state, x).value;
}

double wavefunction_derivative(const PotentialProfile& profile, const UnitSystem& units,
                               const BoundState& state, double x) {
  return evaluate(profile, units, state, x).slope;
}

}  // namespace qwi::classical
