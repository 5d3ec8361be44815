#include "qwi/potential.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qwi/errors.hpp"

namespace qwi {

PotentialProfile PotentialProfile::three_region(double u1, double u2, double u3, double width) {
  return PotentialProfile{{0.0, width}, {u1, u2, u3}};
}

double PotentialProfile::region_width(std::size_t region) const {
  if (region == 0 || region + 1 >= values.size()) {
    throw DomainError("region " + std::to_string(region) + " is semi-infinite");
  }
  return boundaries[region] - boundaries[region - 1];
}

std::size_t PotentialProfile::region_at(double x) const {
  auto it = std::lower_bound(boundaries.begin(), boundaries.end(), x);
  return static_cast<std::size_t>(it - boundaries.begin());
}

double PotentialProfile::threshold() const { return std::min(values.front(), values.back()); }

double PotentialProfile::minimum() const { return *std::min_element(values.begin(), values.end()); }

cplx RegionWaveNumber::complex_value() const {
  return kind == WaveKind::propagating ? cplx(magnitude, 0.0) : cplx(0.0, magnitude);
}

cplx RegionWaveNumber::exponent() const {
  return kind == WaveKind::propagating ? cplx(0.0, magnitude) : cplx(magnitude, 0.0);
}

void validate_units(const UnitSystem& units) {
  if (!(units.hbar > 0.0) || !std::isfinite(units.hbar)) {
    throw ValidationError("hbar must be positive and finite");
  }
  if (!(units.mass > 0.0) || !std::isfinite(units.mass)) {
    throw ValidationError("mass must be positive and finite");
  }
}

void validate_profile(const PotentialProfile& profile) {
  const auto& b = profile.boundaries;
  const auto& v = profile.values;
  if (v.size() != b.size() + 1) {
    std::ostringstream msg;
    msg << "length mismatch: " << v.size() << " potentials for " << b.size()
        << " boundaries (expected " << b.size() + 1 << ")";
    throw ValidationError(msg.str());
  }
  if (v.size() < 2) {
    throw ValidationError("a profile needs at least two regions");
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (!std::isfinite(b[i])) {
      throw ValidationError("boundary " + std::to_string(i) + " is not finite");
    }
    if (i > 0 && !(b[i] > b[i - 1])) {
      std::ostringstream msg;
      msg << "non-monotone boundaries: boundary " << i << " (" << b[i]
          << ") does not exceed boundary " << i - 1 << " (" << b[i - 1] << ")";
      throw ValidationError(msg.str());
    }
  }
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!std::isfinite(v[i])) {
      throw ValidationError("potential " + std::to_string(i) + " is not finite");
    }
  }
}

RegionWaveNumber wavenumber(const PotentialProfile& profile, const UnitSystem& units,
                            std::size_t region, double energy) {
  if (region >= profile.region_count()) {
    throw DomainError("region index " + std::to_string(region) + " out of range");
  }
  const double diff = energy - profile.values[region];
  if (diff == 0.0) {
    std::ostringstream msg;
    msg << "degenerate wavenumber: E equals U = " << profile.values[region] << " in region "
        << region;
    throw DegenerateWavenumberError(msg.str());
  }
  RegionWaveNumber w;
  w.kind = diff > 0.0 ? WaveKind::propagating : WaveKind::evanescent;
  w.magnitude = std::sqrt(2.0 * units.mass * std::abs(diff)) / units.hbar;
  return w;
}

}  // namespace qwi
