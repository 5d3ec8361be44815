// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "qwi/classical.hpp"
#include "qwi/greens.hpp"
#include "qwi/impedance.hpp"
#include "qwi/oracle.hpp"
#include "qwi/transfer.hpp"
#include "support/oracles.hpp"

using namespace qwi;
namespace t = qwi::testing;

namespace {

int failures = 0;

void report(int id, const char* title, bool pass, const std::string& detail) {
  std::printf("[%s] %d %s: %s\n", pass ? "PASS" : "FAIL", id, title, detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<PotentialProfile> random_wells(std::uint64_t seed, int count) {
  t::Gen g(seed);
  std::vector<PotentialProfile> out;
  for (int i = 0; i < count; ++i) out.push_back(t::random_well(g));
  return out;
}

const std::vector<PotentialProfile> kProfiles = random_wells(20240601, 50);

void three_way_agreement() {
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  bool counts_match = true;
  std::size_t states = 0;
  for (const auto& p : kProfiles) {
    const auto c = classical::find_bound_states(p, {});
    const auto m = transfer::find_bound_states(p, {});
    const auto z = impedance::find_bound_states(p, {});
    counts_match = counts_match && c.size() == m.size() && c.size() == z.size() && !c.empty();
    if (!counts_match) break;
    states += c.size();
    for (std::size_t i = 0; i < c.size(); ++i) {
      worst = std::max({worst, std::abs(c[i].energy - m[i].energy),
                        std::abs(c[i].energy - z[i].energy), std::abs(m[i].energy - z[i].energy)});
    }
  }
  const double elapsed = seconds_since(t0);
  report(1, "three-way eigenvalue agreement", counts_match && worst < 1e-10 && elapsed < 10.0,
         fmt("%zu states on 50 profiles, max pairwise |dE| = %.3g (tol 1e-10), %.2f s (limit 10 s)",
             states, worst, elapsed));
}

void oracle_agreement() {
  double worst = 0.0;
  bool counts_match = true;
  double order_lo = 1e9, order_hi = -1e9;
  for (const auto& p : kProfiles) {
    const auto exact = classical::find_bound_states(p, {});
    const auto fd = oracle::solve(p, {});
    if (fd.size() != exact.size()) {
      counts_match = false;
      continue;
    }
    for (std::size_t i = 0; i < fd.size(); ++i)
      worst = std::max(worst, std::abs(fd[i].energy - exact[i].energy));

    // Ground state on three nested grids; least-squares slope of log error against log h.
    const double e0 = exact.front().energy;
    auto grid = oracle::discretize(p, {}, 2001, oracle::margin_rule(p, {}, e0));
    std::vector<double> lh, le;
    for (int level = 0; level < 3; ++level) {
      lh.push_back(std::log(grid.step));
      le.push_back(std::log(std::abs(oracle::eigenvalue(grid, 0) - e0)));
      if (level < 2) grid = oracle::refine(p, {}, grid);
    }
    const double mh = (lh[0] + lh[1] + lh[2]) / 3, me = (le[0] + le[1] + le[2]) / 3;
    double num = 0, den = 0;
    for (int i = 0; i < 3; ++i) {
      num += (lh[i] - mh) * (le[i] - me);
      den += (lh[i] - mh) * (lh[i] - mh);
    }
    const double order = num / den;
    order_lo = std::min(order_lo, order);
    order_hi = std::max(order_hi, order);
  }
  const bool pass = counts_match && worst < 5e-4 && order_lo >= 1.7 && order_hi <= 2.3;
  report(2, "finite-difference oracle agreement", pass,
         fmt("n=%zu, max |dE| = %.3g (tol 5e-4), counts %s, fitted order in [%.3f, %.3f] (2.0 +- 0.3)",
             oracle::kDefaultPoints, worst, counts_match ? "match" : "differ", order_lo, order_hi));
}

void normalization_closed_form() {
  double worst = 0.0;
  std::size_t roots = 0;
  for (const auto& p : kProfiles) {
    for (const auto& s : classical::find_bound_states(p, {})) {
      const double closed = classical::inverse_norm_closed_form(p, {}, s.energy);
      const double quad = t::quadrature_inverse_norm(t::waves(p, {}, s.energy));
      worst = std::max(worst, t::rel_err(closed, quad));
      ++roots;
    }
  }
  report(3, "closed-form normalization vs quadrature", worst < 1e-10 && roots > 0,
         fmt("%zu roots, max relative difference %.3g (tol 1e-10)", roots, worst));
}

void transfer_closed_form() {
  t::Gen g(777);
  double worst_entry = 0.0, worst_det = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const auto p = t::random_well(g);
    const double lo = p.values[1], hi = std::min(p.values[0], p.values[2]);
    const double e = g.uniform(lo + 1e-6 * (hi - lo), hi - 1e-6 * (hi - lo));
    const auto w = t::waves(p, {}, e);
    const auto ref = t::closed_form_transfer(w);
    const auto m = transfer::total_transfer(p, {}, e);
    for (int j = 0; j < 4; ++j) {
      const double d = std::abs(m.at(j / 2, j % 2) - ref[j]);
      worst_entry = std::max(worst_entry, d / std::abs(ref[j]));
    }
    worst_det = std::max(worst_det, t::rel_err(m.det(), cplx(w.kappa1 / w.kappa3)));
  }
  report(4, "transfer-matrix closed form", worst_entry < 1e-12 && worst_det < 1e-12,
         fmt("1000 (E, profile) pairs, max entry relative error %.3g, max det error %.3g (tol 1e-12)",
             worst_entry, worst_det));
}

void greens_density() {
  const auto profiles = random_wells(99173, 10);
  double worst_classical = 0.0, worst_closed = 0.0;
  std::size_t states = 0;
  for (const auto& p : profiles) {
    const double a = p.boundaries[1];
    for (const auto& s : classical::find_bound_states(p, {})) {
      ++states;
      const auto w = t::waves(p, {}, s.energy);
      const double phi = -std::atan(w.kappa1 / w.k2);
      const double norm = 2.0 / (a + (w.kappa1 + w.kappa3) / (w.kappa1 * w.kappa3));
      for (int k = 0; k < 1000; ++k) {
        const double x = a * (k + 0.5) / 1000.0;
        const double rho = greens::eigenfunction_density(p, {}, x, s.energy);
        const double psi = classical::wavefunction(p, {}, s, x);
        const double c = std::cos(w.k2 * x + phi);
        worst_classical = std::max(worst_classical, std::abs(rho - psi * psi));
        worst_closed = std::max(worst_closed, std::abs(rho - norm * c * c));
      }
    }
  }
  report(5, "Green's-function density", worst_classical < 1e-6 && worst_closed < 1e-6,
         fmt("%zu states x 1000 points, max |diff| vs |psi|^2 %.3g, vs closed form %.3g (tol 1e-6)",
             states, worst_classical, worst_closed));
}

void infinite_well_limit() {
  const double u2 = -1.0, a = 1.0;
  const std::vector<double> heights{1e3, 3e3, 1e4, 3e4, 1e5, 3e5, 1e6};
  bool monotone = true;
  std::vector<double> last(3, 1e300);
  std::vector<double> final_err(3, 0.0);
  for (double v : heights) {
    const auto p = PotentialProfile::three_region(v, u2, v, a);
    const int resolution = static_cast<int>(std::min(4.0 * v, 4.0e6));
    const auto s = classical::find_bound_states(p, {}, resolution);
    if (s.size() < 3) {
      monotone = false;
      break;
    }
    for (int n = 1; n <= 3; ++n) {
      const double limit = u2 + std::pow(n * std::numbers::pi / a, 2) / 2.0;
      const double err = std::abs(s[n - 1].energy - limit);
      monotone = monotone && err < last[n - 1];
      last[n - 1] = err;
      final_err[n - 1] = err / (limit - u2);
    }
  }
  report(6, "infinite-well limit", monotone && final_err[0] < 1e-2,
         fmt("U1=U3 from 1e3 to 1e6, errors of n=1..3 monotone: %s; relative error at 1e6: %.2e %.2e %.2e",
             monotone ? "yes" : "no", final_err[0], final_err[1], final_err[2]));
}

void impedance_identities() {
  t::Gen g(4242);
  double worst_matched = 0.0, worst_zero = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double mag = g.uniform(0.05, 20.0);
    const bool prop = g.coin();
    const cplx q = prop ? cplx(0.0, mag) : cplx(mag, 0.0);
    const impedance::CharacteristicImpedance z0{q, prop ? WaveKind::propagating : WaveKind::evanescent};
    const double len = g.uniform(0.0, 20.0);
    const cplx zl(g.uniform(-10, 10), g.uniform(-10, 10));
    worst_matched = std::max(worst_matched, t::rel_err(impedance::input_impedance(z0, q, q, len), q));
    worst_zero = std::max(worst_zero, t::rel_err(impedance::input_impedance(z0, zl, q, 0.0), zl));
  }
  report(7, "input-impedance identities", worst_matched < 1e-14 && worst_zero < 1e-14,
         fmt("1000 cases, matched load %.3g, zero length %.3g (tol 1e-14)", worst_matched, worst_zero));
}

void transfer_invariance() {
  t::Gen g(8080);
  double worst_split = 0.0, worst_insert = 0.0;
  int renormalized = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto p = t::random_profile(g, 8);
    const double e = t::random_energy(g, p);
    const auto base = transfer::total_transfer(p, {}, e);
    if (base.log_scale > 10.0) ++renormalized;

    const auto r = static_cast<std::size_t>(g.integer(1, static_cast<int>(p.region_count()) - 2));
    auto q = p;
    const double cut = p.boundaries[r - 1] + g.uniform(0.05, 0.95) * p.region_width(r);
    q.boundaries.insert(q.boundaries.begin() + static_cast<long>(r), cut);
    q.values.insert(q.values.begin() + static_cast<long>(r), p.values[r]);
    worst_split = std::max(worst_split,
                           transfer::relative_difference(base, transfer::total_transfer(q, {}, e)));

    auto layers = transfer::layers_at(p, {}, e);
    const long at = g.integer(1, static_cast<int>(layers.size()) - 1);
    const double d = e - g.uniform(-30.0, 30.0);
    const cplx qz = d > 0 ? cplx(0.0, std::sqrt(2.0 * d)) : cplx(std::sqrt(-2.0 * d), 0.0);
    layers.insert(layers.begin() + at, transfer::Layer{qz, 0.0});
    worst_insert = std::max(worst_insert, transfer::relative_difference(
                                              base, transfer::transfer_through_layers(layers)));
  }
  report(8, "region splitting and zero-width insertion", worst_split < 1e-12 && worst_insert < 1e-12 && renormalized > 0,
         fmt("1000 profiles (N <= 8, %d with log scale > 10), split %.3g, insertion %.3g (tol 1e-12)",
             renormalized, worst_split, worst_insert));
}

}  // namespace

int main() {
  three_way_agreement();
  oracle_agreement();
  normalization_closed_form();
  transfer_closed_form();
  greens_density();
  infinite_well_limit();
  impedance_identities();
  transfer_invariance();
  std::printf("%d of 8 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
