#include "qwi/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "qwi/errors.hpp"

namespace qwi::oracle {

namespace {

// Integral of the unit hat kernel (1 - |s|/h)/h from -h to s, for s in [-h, h].
double hat_cdf(double s, double h) {
  if (s <= -h) return 0.0;
  if (s >= h) return 1.0;
  if (s <= 0.0) {
    const double t = (s + h) / h;
    return 0.5 * t * t;
  }
  const double t = (h - s) / h;
  return 1.0 - 0.5 * t * t;
}

double node_potential(const PotentialProfile& profile, double x, double h) {
  const auto& b = profile.boundaries;
  auto first = std::upper_bound(b.begin(), b.end(), x - h);
  if (first == b.end() || *first >= x + h) {
    return profile.potential_at(x);
  }
  // Boundaries inside (x - h, x + h): integrate the piecewise-constant U against the hat.
  double total = 0.0;
  double lo = -h;
  std::size_t region = static_cast<std::size_t>(first - b.begin());
  for (auto it = first; it != b.end() && *it < x + h; ++it, ++region) {
    const double hi = *it - x;
    total += profile.values[region] * (hat_cdf(hi, h) - hat_cdf(lo, h));
    lo = hi;
  }
  total += profile.values[region] * (1.0 - hat_cdf(lo, h));
  return total;
}

// Gaussian elimination with partial pivoting on a tridiagonal system (the dgtsv scheme).
// sub/sup are the off-diagonals, all equal to `off`; diag is overwritten. Zero pivots are
// replaced by `tiny`, which is what inverse iteration wants near an exact eigenvalue.
template <class T>
void solve_shifted(std::vector<T> diag, T off, T tiny, std::vector<T>& rhs) {
  const std::size_t n = diag.size();
  std::vector<T> dl(n, off);   // sub-diagonal, reused as second super-diagonal
  std::vector<T> du(n, off);   // super-diagonal
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (std::abs(diag[i]) >= std::abs(dl[i])) {
      if (std::abs(diag[i]) < tiny) diag[i] = std::copysign(tiny, diag[i] == T(0) ? T(1) : diag[i]);
      const T fact = dl[i] / diag[i];
      diag[i + 1] -= fact * du[i];
      rhs[i + 1] -= fact * rhs[i];
      dl[i] = T(0);
    } else {
      const T fact = diag[i] / dl[i];
      diag[i] = dl[i];
      const T temp = diag[i + 1];
      diag[i + 1] = du[i] - fact * temp;
      if (i + 2 < n) {
        dl[i] = du[i + 1];
        du[i + 1] = -fact * dl[i];
      } else {
        dl[i] = T(0);
      }
      du[i] = temp;
      const T b = rhs[i];
      rhs[i] = rhs[i + 1];
      rhs[i + 1] = b - fact * rhs[i + 1];
    }
  }
  if (std::abs(diag[n - 1]) < tiny) diag[n - 1] = std::copysign(tiny, diag[n - 1] == T(0) ? T(1) : diag[n - 1]);
  rhs[n - 1] /= diag[n - 1];
  if (n > 1) {
    rhs[n - 2] = (rhs[n - 2] - du[n - 2] * rhs[n - 1]) / diag[n - 2];
  }
  for (std::size_t k = n - 2; k-- > 0;) {
    rhs[k] = (rhs[k] - du[k] * rhs[k + 1] - dl[k] * rhs[k + 2]) / diag[k];
  }
}

double tail_ratio(const std::vector<double>& v) {
  double peak = 0.0;
  for (double x : v) peak = std::max(peak, x * x);
  if (!(peak > 0.0)) return 0.0;
  return std::max(v.front() * v.front(), v.back() * v.back()) / peak;
}

}  // namespace

DiscretizedProblem discretize_on_grid(const PotentialProfile& profile, const UnitSystem& units,
                                      double x_min, double step, std::size_t n_points) {
  validate_profile(profile);
  validate_units(units);
  if (n_points < 64) {
    throw DomainError("the oracle grid needs at least 64 points");
  }
  if (!(step > 0.0)) {
    throw DomainError("grid step must be positive");
  }
  DiscretizedProblem p;
  p.x_min = x_min;
  p.step = step;
  p.n_points = n_points;
  p.x_max = p.x_at(n_points - 1);
  const double kinetic = units.hbar * units.hbar / (units.mass * step * step);
  p.offdiagonal = -0.5 * kinetic;
  p.diagonal.resize(n_points);
  for (std::size_t i = 0; i < n_points; ++i) {
    p.diagonal[i] = kinetic + node_potential(profile, p.x_at(i), step);
  }
  return p;
}

DiscretizedProblem discretize(const PotentialProfile& profile, const UnitSystem& units,
                              std::size_t n_points, Margins margins) {
  validate_profile(profile);
  if (n_points < 64) {
    throw DomainError("the oracle grid needs at least 64 points");
  }
  if (!(margins.left > 0.0 && margins.right > 0.0)) {
    throw DomainError("margins must be positive");
  }
  const double first = profile.boundaries.front();
  const double span = profile.boundaries.back() - first;
  const double total = margins.left + span + margins.right;
  const double intervals = static_cast<double>(n_points - 1);
  double step = total / intervals;
  long inner = 0;
  if (span > 0.0) {
    inner = std::max(1L, std::lround(span / step));
    step = span / static_cast<double>(inner);
  }
  const long outer = static_cast<long>(n_points - 1) - inner;
  if (outer < 2) {
    throw DomainError("too few grid points to hold the margins");
  }
  const long left =
      std::clamp(std::lround(outer * margins.left / (margins.left + margins.right)), 1L, outer - 1);
  return discretize_on_grid(profile, units, first - static_cast<double>(left) * step, step,
                            n_points);
}

DiscretizedProblem discretize(const PotentialProfile& profile, const UnitSystem& units,
                              std::size_t n_points, double margin) {
  return discretize(profile, units, n_points, Margins{margin, margin});
}

DiscretizedProblem refine(const PotentialProfile& profile, const UnitSystem& units,
                          const DiscretizedProblem& problem) {
  return discretize_on_grid(profile, units, problem.x_min, 0.5 * problem.step,
                            2 * problem.n_points - 1);
}

std::size_t sturm_count(const DiscretizedProblem& problem, double energy) {
  const auto& d = problem.diagonal;
  const double e2 = problem.offdiagonal * problem.offdiagonal;
  const double pivmin = std::numeric_limits<double>::min() * std::max(1.0, e2);
  std::size_t count = 0;
  double q = d[0] - energy;
  if (std::abs(q) < pivmin) q = -pivmin;
  if (q < 0.0) ++count;
  for (std::size_t i = 1; i < d.size(); ++i) {
    q = d[i] - energy - e2 / q;
    if (std::abs(q) < pivmin) q = -pivmin;
    if (q < 0.0) ++count;
  }
  return count;
}

double eigenvalue(const DiscretizedProblem& problem, std::size_t index) {
  if (index >= problem.n_points) {
    throw DomainError("eigenvalue index out of range");
  }
  const auto [dmin, dmax] = std::minmax_element(problem.diagonal.begin(), problem.diagonal.end());
  const double radius = 2.0 * std::abs(problem.offdiagonal);
  double lo = *dmin - radius;
  double hi = *dmax + radius;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (hi - lo < 1e-14 * std::max(1.0, std::abs(mid)) || mid == lo || mid == hi) break;
    if (sturm_count(problem, mid) > index) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<double> eigenvector(const DiscretizedProblem& problem, double lambda) {
  // Inverse iteration in extended precision; the result is rounded to double once at the end.
  using ld = long double;
  const std::size_t n = problem.n_points;
  std::vector<ld> shifted(n);
  for (std::size_t i = 0; i < n; ++i) shifted[i] = static_cast<ld>(problem.diagonal[i]) - lambda;
  const double norm = std::abs(*std::max_element(problem.diagonal.begin(), problem.diagonal.end(),
                                                 [](double a, double b) {
                                                   return std::abs(a) < std::abs(b);
                                                 })) +
                      2.0 * std::abs(problem.offdiagonal);
  const ld tiny = std::numeric_limits<ld>::epsilon() * norm;

  std::vector<ld> w(n);
  for (std::size_t i = 0; i < n; ++i) {
    w[i] = 1.0L + 0.5L * std::sin(0.7L * static_cast<ld>(i));
  }
  for (int it = 0; it < 3; ++it) {
    solve_shifted<ld>(shifted, problem.offdiagonal, tiny, w);
    ld sum = 0.0L;
    for (ld x : w) sum += x * x;
    const ld scale = 1.0L / std::sqrt(sum);
    for (ld& x : w) x *= scale;
  }
  ld peak = 0.0L;
  for (ld x : w) peak = std::max(peak, std::abs(x));
  ld sign = 1.0L;
  for (ld x : w) {
    if (std::abs(x) > 1e-3L * peak) {
      sign = x > 0.0L ? 1.0L : -1.0L;
      break;
    }
  }
  const ld scale = sign / std::sqrt(static_cast<ld>(problem.step));
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<double>(w[i] * scale);
  return v;
}

double eigen_residual(const DiscretizedProblem& problem, double lambda,
                      const std::vector<double>& v) {
  // Extended precision so the measurement does not add its own O(eps ||H||) rounding.
  using ld = long double;
  const std::size_t n = v.size();
  const ld off = problem.offdiagonal;
  ld res = 0.0L;
  ld nv = 0.0L;
  for (std::size_t i = 0; i < n; ++i) {
    ld hv = (static_cast<ld>(problem.diagonal[i]) - lambda) * v[i];
    if (i > 0) hv += off * v[i - 1];
    if (i + 1 < n) hv += off * v[i + 1];
    res += hv * hv;
    nv += static_cast<ld>(v[i]) * v[i];
  }
  return static_cast<double>(std::sqrt(res / nv));
}

std::vector<OracleState> eigenvalues_below(const DiscretizedProblem& problem, double e_cut) {
  const std::size_t count = sturm_count(problem, e_cut);
  std::vector<OracleState> out;
  out.reserve(count);
  for (std::size_t j = 0; j < count; ++j) {
    OracleState s;
    s.energy = eigenvalue(problem, j);
    s.x_min = problem.x_min;
    s.step = problem.step;
    s.eigenvector = eigenvector(problem, s.energy);
    s.margin_warning = tail_ratio(s.eigenvector) > kTailWarning;
    out.push_back(std::move(s));
  }
  return out;
}

Margins margin_rule(const PotentialProfile& profile, const UnitSystem& units, double energy,
                    double relative_shift) {
  const double left_gap = profile.values.front() - energy;
  const double right_gap = profile.values.back() - energy;
  if (!(left_gap > 0.0 && right_gap > 0.0)) {
    throw DomainError("margin rule needs an energy below both outer levels");
  }
  if (!(relative_shift > 0.0)) {
    throw DomainError("the truncation shift must be positive");
  }
  const double depth = profile.threshold() - profile.minimum();
  const double delta = relative_shift * (depth > 0.0 ? depth : std::max(left_gap, right_gap));
  const auto length = [&](double gap) {
    const double kappa = std::sqrt(2.0 * units.mass * gap) / units.hbar;
    const double e_kappa = units.hbar * units.hbar * kappa * kappa / units.mass;
    const double decay_lengths = std::max(std::log(4.0 * e_kappa / delta), 2.0 * kMinDecayLengths);
    return decay_lengths / (2.0 * kappa);
  };
  return {length(left_gap), length(right_gap)};
}

std::vector<OracleState> solve(const PotentialProfile& profile, const UnitSystem& units,
                               const OracleOptions& options) {
  validate_profile(profile);
  validate_units(units);
  const double lo = profile.minimum();
  const double e_cut = profile.threshold();
  if (!(e_cut > lo)) {
    return {};
  }
  const auto capped = [&](Margins m) {
    return Margins{std::min(m.left, options.max_margin), std::min(m.right, options.max_margin)};
  };

  // Counting grid: margins wide enough for a state 1e-3 of the window below threshold,
  // widened until they also cover the shallowest state actually found.
  Margins margins =
      capped(margin_rule(profile, units, e_cut - 1e-3 * (e_cut - lo), options.relative_shift));
  DiscretizedProblem counting = discretize(profile, units, options.n_points, margins);
  std::size_t count = sturm_count(counting, e_cut);
  for (int round = 0; round < 8 && count > 0; ++round) {
    const double top = eigenvalue(counting, count - 1);
    const Margins need = capped(margin_rule(profile, units, top, options.relative_shift));
    if (need.left <= margins.left && need.right <= margins.right) break;
    margins = {std::max(margins.left, need.left), std::max(margins.right, need.right)};
    counting = discretize(profile, units, options.n_points, margins);
    count = sturm_count(counting, e_cut);
  }

  std::vector<OracleState> states;
  states.reserve(count);
  for (std::size_t j = 0; j < count; ++j) {
    double energy = eigenvalue(counting, j);
    DiscretizedProblem own = counting;
    // Two passes: the margins depend on the energy they are meant to resolve.
    for (int pass = 0; pass < 2; ++pass) {
      const Margins m = capped(margin_rule(profile, units, energy, options.relative_shift));
      DiscretizedProblem trial = discretize(profile, units, options.n_points, m);
      if (sturm_count(trial, e_cut) <= j) break;
      own = std::move(trial);
      energy = eigenvalue(own, j);
    }
    OracleState s;
    s.energy = energy;
    s.x_min = own.x_min;
    s.step = own.step;
    s.eigenvector = eigenvector(own, energy);
    s.margin_warning = tail_ratio(s.eigenvector) > kTailWarning;
    states.push_back(std::move(s));
  }
  return states;
}

}  // namespace qwi::oracle
