#pragma once

#include <span>
#include <vector>

#include "qwi/bound_state.hpp"
#include "qwi/potential.hpp"
#include "qwi/roots.hpp"

namespace qwi::transfer {

/// 2x2 complex matrix stored as exp(log_scale) * [[m11, m12], [m21, m22]].
///
/// Products renormalize the mantissa by its largest entry so long evanescent
/// stacks do not overflow; the discarded magnitude accumulates in log_scale.
struct TransferMatrix {
  cplx m11{1.0, 0.0};
  cplx m12{0.0, 0.0};
  cplx m21{0.0, 0.0};
  cplx m22{1.0, 0.0};
  double log_scale = 0.0;

  static TransferMatrix identity() { return {}; }

  /// Entry (row, col), 0-based, including the scale factor. May overflow.
  cplx at(int row, int col) const;
  const cplx& mantissa(int row, int col) const;

  /// Determinant including the scale factor.
  cplx det() const;

  /// Same matrix with the mantissa rescaled so its largest entry has magnitude 1.
  TransferMatrix renormalized() const;

  TransferMatrix transposed() const;
};

TransferMatrix operator*(const TransferMatrix& lhs, const TransferMatrix& rhs);

/// max |A_ij - B_ij| / max(max |A_ij|, max |B_ij|), computed in a common scale.
double relative_difference(const TransferMatrix& a, const TransferMatrix& b);

/// Interface between regions with exponent rates q_left and q_right (kappa or i*k):
/// 1/2 [[(ql + qr)/qr, (qr - ql)/qr], [(qr - ql)/qr, (ql + qr)/qr]].
/// Maps the amplitudes of exp(+q x), exp(-q x) on the left to those on the right.
TransferMatrix interface_matrix(cplx q_left, cplx q_right);

/// diag(exp(q L), exp(-q L)); the factor exp(Re(q) L) is kept in log_scale.
TransferMatrix propagation_matrix(cplx q, double length);

/// One region as seen by the transfer product: exponent rate and width.
/// Widths of the first and last layers are ignored.
struct Layer {
  cplx exponent;
  double width = 0.0;
};

/// Layers of a profile at energy E. Throws DegenerateWavenumberError if E hits a region level.
std::vector<Layer> layers_at(const PotentialProfile& profile, const UnitSystem& units,
                             double energy);

/// I(N-1,N) P(N-1) ... P(2) I(1,2): amplitudes in the first region to those in the last,
/// each region's amplitudes referenced to its left interface.
TransferMatrix transfer_through_layers(std::span<const Layer> layers);

TransferMatrix total_transfer(const PotentialProfile& profile, const UnitSystem& units,
                              double energy);

/// Re(T11) * 2 kappa_N * prod_{interior j} |q_j|. For the three-region well this is
/// T11 * 2 k2 kappa3, identical to the classical dispersion residual. Requires
/// min(U) < E < min(U_first, U_last). May overflow to +-inf for very long evanescent stacks;
/// the root finder uses the scaled mantissa instead.
double bound_state_residual_tm(const PotentialProfile& profile, const UnitSystem& units,
                               double energy);

/// Roots of the T11 condition for any N-region profile, ascending.
std::vector<BoundState> find_bound_states(const PotentialProfile& profile,
                                          const UnitSystem& units,
                                          int resolution = kDefaultResolution);

}  // namespace qwi::transfer
