#pragma once

#include <cstddef>
#include <vector>

#include "qwi/potential.hpp"

// Finite-difference eigensolver used to cross-check the analytic methods. It shares nothing
// with them beyond the profile type: the Hamiltonian is discretized on a uniform grid with
// hard walls, eigenvalues come from Sturm-sequence bisection and eigenvectors from inverse
// iteration.

namespace qwi::oracle {

inline constexpr std::size_t kDefaultPoints = 20001;
/// A hard wall a distance L into an outer region of decay constant kappa raises a bound
/// level by at most (4 hbar^2 kappa^2 / m) exp(-2 kappa L) (using |psi|^2 <= 2 kappa at the
/// interface). Margins are chosen so this is kTruncationShift times the well depth.
inline constexpr double kTruncationShift = 1e-7;
/// Never closer to the interface than this many decay lengths.
inline constexpr double kMinDecayLengths = 4.0;
inline constexpr double kTailWarning = 1e-10;

struct Margins {
  double left = 0.0;
  double right = 0.0;
};

/// Symmetric tridiagonal H = -(hbar^2/2m) D2 + U on n nodes x_i = x_min + i*step,
/// with psi = 0 one step beyond either end.
struct DiscretizedProblem {
  double x_min = 0.0;
  double x_max = 0.0;
  std::size_t n_points = 0;
  double step = 0.0;
  std::vector<double> diagonal;  ///< hbar^2/(m h^2) + U_i
  double offdiagonal = 0.0;      ///< -hbar^2/(2 m h^2)

  double x_at(std::size_t i) const { return x_min + step * static_cast<double>(i); }
};

/// Grid with the first and last interfaces on nodes and at least roughly the requested
/// margins outside them. Node potentials are hat-kernel averages of U, which equal
/// (U_left + U_right)/2 on an interface node. Requires n_points >= 64.
DiscretizedProblem discretize(const PotentialProfile& profile, const UnitSystem& units,
                              std::size_t n_points, Margins margins);
DiscretizedProblem discretize(const PotentialProfile& profile, const UnitSystem& units,
                              std::size_t n_points, double margin);

/// Same operator on an explicit grid.
DiscretizedProblem discretize_on_grid(const PotentialProfile& profile, const UnitSystem& units,
                                      double x_min, double step, std::size_t n_points);

/// Nested grid with half the step over the same node range (2n - 1 nodes).
DiscretizedProblem refine(const PotentialProfile& profile, const UnitSystem& units,
                          const DiscretizedProblem& problem);

/// Number of eigenvalues strictly below `energy`.
std::size_t sturm_count(const DiscretizedProblem& problem, double energy);

/// The index-th eigenvalue (0-based, ascending) by bisection on the Sturm count.
double eigenvalue(const DiscretizedProblem& problem, std::size_t index);

/// Eigenvector for a computed eigenvalue, normalized so sum psi_i^2 h = 1, first
/// significant component positive.
std::vector<double> eigenvector(const DiscretizedProblem& problem, double eigenvalue);

/// ||H v - lambda v|| / ||v||.
double eigen_residual(const DiscretizedProblem& problem, double eigenvalue,
                      const std::vector<double>& vector);

struct OracleState {
  double energy = 0.0;
  double x_min = 0.0;
  double step = 0.0;
  std::vector<double> eigenvector;
  /// Edge density relative to the peak exceeded kTailWarning: the margin was too small.
  bool margin_warning = false;

  double x_at(std::size_t i) const { return x_min + step * static_cast<double>(i); }
};

/// All eigenpairs of `problem` below e_cut, which must not exceed min(U_first, U_last).
std::vector<OracleState> eigenvalues_below(const DiscretizedProblem& problem, double e_cut);

/// Margins from the outer decay constants at `energy`: L = ln(4 hbar^2 kappa^2 / (m delta)) / (2 kappa)
/// with delta = relative_shift * (threshold - min U).
Margins margin_rule(const PotentialProfile& profile, const UnitSystem& units, double energy,
                    double relative_shift = kTruncationShift);

struct OracleOptions {
  std::size_t n_points = kDefaultPoints;
  double relative_shift = kTruncationShift;
  double max_margin = 1e4;
};

/// Bound states of any profile. The state count comes from a grid whose margins cover the
/// shallowest state; each state is then recomputed on a grid with margins from its own
/// decay constants, so deep states keep a fine step.
std::vector<OracleState> solve(const PotentialProfile& profile, const UnitSystem& units,
                               const OracleOptions& options = {});

}  // namespace qwi::oracle
