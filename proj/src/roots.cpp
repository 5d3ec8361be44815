#include "qwi/roots.hpp"

#include <algorithm>
#include <cmath>

#include "qwi/errors.hpp"

namespace qwi {

std::vector<double> window_samples(double lo, double hi, int resolution) {
  if (resolution < 2) {
    throw DomainError("bracketing resolution must be at least 2");
  }
  if (!(hi > lo)) {
    throw DomainError("empty bracketing window");
  }
  const double inset = 1e-12 * (hi - lo);
  std::vector<double> grid(static_cast<std::size_t>(resolution));
  const double step = (hi - lo) / static_cast<double>(resolution - 1);
  for (int i = 0; i < resolution; ++i) {
    grid[static_cast<std::size_t>(i)] = lo + step * i;
  }
  grid.front() = lo + inset;
  grid.back() = hi - inset;
  return grid;
}

double bisect(const std::function<double(double)>& f, double a, double b, double fa,
              double rel_tol) {
  double lo = a;
  double hi = b;
  double flo = fa;
  // 200 halvings exhaust any double interval.
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (hi - lo < rel_tol * std::max(1.0, std::abs(mid)) || mid == lo || mid == hi) {
      return mid;
    }
    const double fm = f(mid);
    if (fm == 0.0) {
      return mid;
    }
    if (std::signbit(fm) == std::signbit(flo)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<double> bracket_roots(const std::function<double(double)>& f, double lo, double hi,
                                  int resolution, double rel_tol) {
  const auto grid = window_samples(lo, hi, resolution);
  std::vector<double> roots;
  double prev_e = grid.front();
  double prev_f = f(prev_e);
  if (prev_f == 0.0) {
    roots.push_back(prev_e);
  }
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double e = grid[i];
    const double fe = f(e);
    if (fe == 0.0) {
      roots.push_back(e);
    } else if (prev_f != 0.0 && std::signbit(fe) != std::signbit(prev_f)) {
      roots.push_back(bisect(f, prev_e, e, prev_f, rel_tol));
    }
    prev_e = e;
    prev_f = fe;
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace qwi
