#include "qwi/transfer.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qwi/errors.hpp"

namespace qwi::transfer {

namespace {

double max_abs(const TransferMatrix& t) {
  return std::max({std::abs(t.m11), std::abs(t.m12), std::abs(t.m21), std::abs(t.m22)});
}

}  // namespace

const cplx& TransferMatrix::mantissa(int row, int col) const {
  if (row == 0) {
    return col == 0 ? m11 : m12;
  }
  return col == 0 ? m21 : m22;
}

cplx TransferMatrix::at(int row, int col) const {
  return mantissa(row, col) * std::exp(log_scale);
}

cplx TransferMatrix::det() const {
  return (m11 * m22 - m12 * m21) * std::exp(2.0 * log_scale);
}

TransferMatrix TransferMatrix::renormalized() const {
  const double peak = max_abs(*this);
  if (!(peak > 0.0) || !std::isfinite(peak)) {
    return *this;
  }
  TransferMatrix out = *this;
  out.m11 /= peak;
  out.m12 /= peak;
  out.m21 /= peak;
  out.m22 /= peak;
  out.log_scale += std::log(peak);
  return out;
}

TransferMatrix TransferMatrix::transposed() const {
  TransferMatrix out = *this;
  std::swap(out.m12, out.m21);
  return out;
}

TransferMatrix operator*(const TransferMatrix& lhs, const TransferMatrix& rhs) {
  TransferMatrix out;
  out.m11 = lhs.m11 * rhs.m11 + lhs.m12 * rhs.m21;
  out.m12 = lhs.m11 * rhs.m12 + lhs.m12 * rhs.m22;
  out.m21 = lhs.m21 * rhs.m11 + lhs.m22 * rhs.m21;
  out.m22 = lhs.m21 * rhs.m12 + lhs.m22 * rhs.m22;
  out.log_scale = lhs.log_scale + rhs.log_scale;
  return out;
}

double relative_difference(const TransferMatrix& a, const TransferMatrix& b) {
  const double common = std::max(a.log_scale, b.log_scale);
  const double fa = std::exp(a.log_scale - common);
  const double fb = std::exp(b.log_scale - common);
  double diff = 0.0;
  double peak = 0.0;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      const cplx va = a.mantissa(r, c) * fa;
      const cplx vb = b.mantissa(r, c) * fb;
      diff = std::max(diff, std::abs(va - vb));
      peak = std::max({peak, std::abs(va), std::abs(vb)});
    }
  }
  return peak > 0.0 ? diff / peak : diff;
}

TransferMatrix interface_matrix(cplx q_left, cplx q_right) {
  if (q_right == cplx(0.0, 0.0)) {
    throw DegenerateWavenumberError("interface matrix with zero wavenumber on the right");
  }
  const cplx same = 0.5 * (q_left + q_right) / q_right;
  const cplx cross = 0.5 * (q_right - q_left) / q_right;
  return TransferMatrix{same, cross, cross, same, 0.0};
}

TransferMatrix propagation_matrix(cplx q, double length) {
  if (length < 0.0) {
    throw DomainError("propagation length must be non-negative");
  }
  const double growth = std::abs(q.real()) * length;
  TransferMatrix out;
  out.m11 = std::exp(q * length - growth);
  out.m22 = std::exp(-q * length - growth);
  out.log_scale = growth;
  return out;
}

std::vector<Layer> layers_at(const PotentialProfile& profile, const UnitSystem& units,
                             double energy) {
  std::vector<Layer> layers(profile.region_count());
  for (std::size_t j = 0; j < layers.size(); ++j) {
    layers[j].exponent = wavenumber(profile, units, j, energy).exponent();
    if (j > 0 && j + 1 < layers.size()) {
      layers[j].width = profile.region_width(j);
    }
  }
  return layers;
}

TransferMatrix transfer_through_layers(std::span<const Layer> layers) {
  TransferMatrix total = TransferMatrix::identity();
  for (std::size_t j = 0; j + 1 < layers.size(); ++j) {
    if (j > 0) {
      total = (propagation_matrix(layers[j].exponent, layers[j].width) * total).renormalized();
    }
    total = (interface_matrix(layers[j].exponent, layers[j + 1].exponent) * total).renormalized();
  }
  return total;
}

TransferMatrix total_transfer(const PotentialProfile& profile, const UnitSystem& units,
                              double energy) {
  validate_profile(profile);
  validate_units(units);
  const auto layers = layers_at(profile, units, energy);
  return transfer_through_layers(layers);
}

namespace {

struct ScaledResidual {
  double mantissa;
  double log_scale;
};

void require_window(const PotentialProfile& profile, double energy) {
  const double lo = profile.minimum();
  const double hi = profile.threshold();
  if (!(energy > lo && energy < hi)) {
    std::ostringstream msg;
    msg << "energy " << energy << " outside the bound-state window (" << lo << ", " << hi << ")";
    throw DomainError(msg.str());
  }
}

ScaledResidual scaled_residual(const PotentialProfile& profile, const UnitSystem& units,
                               double energy) {
  const auto layers = layers_at(profile, units, energy);
  const auto t = transfer_through_layers(layers);
  double factor = 2.0 * std::abs(layers.back().exponent);
  for (std::size_t j = 1; j + 1 < layers.size(); ++j) {
    factor *= std::abs(layers[j].exponent);
  }
  return {t.m11.real() * factor, t.log_scale};
}

}  // namespace

double bound_state_residual_tm(const PotentialProfile& profile, const UnitSystem& units,
                               double energy) {
  validate_profile(profile);
  validate_units(units);
  require_window(profile, energy);
  const auto r = scaled_residual(profile, units, energy);
  return r.mantissa * std::exp(r.log_scale);
}

std::vector<BoundState> find_bound_states(const PotentialProfile& profile,
                                          const UnitSystem& units, int resolution) {
  validate_profile(profile);
  validate_units(units);
  if (resolution < 2) {
    throw DomainError("bracketing resolution must be at least 2");
  }
  const double lo = profile.minimum();
  const double hi = profile.threshold();
  std::vector<BoundState> states;
  if (!(hi > lo)) {
    return states;
  }
  // Only the sign matters for bracketing, so the positive scale exp(log_scale) is dropped.
  // Energies that land exactly on an interior level are nudged off it.
  const auto f = [&](double e) {
    try {
      return scaled_residual(profile, units, e).mantissa;
    } catch (const DegenerateWavenumberError&) {
      const double nudged = e + 1e-13 * std::max(1.0, std::abs(e));
      return scaled_residual(profile, units, nudged).mantissa;
    }
  };
  const auto roots = bracket_roots(f, lo, hi, resolution);
  states.reserve(roots.size());
  for (double e : roots) {
    BoundState s;
    s.energy = e;
    s.method = Method::transfer;
    s.index = static_cast<int>(states.size());
    try {
      s.residual = bound_state_residual_tm(profile, units, e);
    } catch (const DegenerateWavenumberError&) {
      s.residual = f(e);
    }
    states.push_back(s);
  }
  return states;
}

}  // namespace qwi::transfer
