#pragma once

#include <functional>
#include <vector>

namespace qwi {

inline constexpr int kDefaultResolution = 4096;
inline constexpr double kRootRelTol = 1e-12;

/// `resolution` sample energies spanning the open interval (lo, hi).
///
/// Interior samples are uniform; the two end samples sit 1e-12*(hi-lo) inside
/// the endpoints, where wavenumbers vanish.
std::vector<double> window_samples(double lo, double hi, int resolution);

/// Bisects a sign change of f on [a, b] until the bracket is narrower than
/// rel_tol * max(1, |E|). f(a) and f(b) must have opposite signs.
double bisect(const std::function<double(double)>& f, double a, double b, double fa,
              double rel_tol = kRootRelTol);

/// All sign changes of f over window_samples(lo, hi, resolution), each polished by bisection.
/// Returned ascending.
std::vector<double> bracket_roots(const std::function<double(double)>& f, double lo, double hi,
                                  int resolution, double rel_tol = kRootRelTol);

}  // namespace qwi
