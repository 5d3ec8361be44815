#include "qwi/report.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <map>
#include <optional>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

#include "qwi/classical.hpp"
#include "qwi/greens.hpp"
#include "qwi/impedance.hpp"
#include "qwi/transfer.hpp"

namespace qwi::cli {

namespace {

using nlohmann::ordered_json;

constexpr const char* kToolName = "qwi";
constexpr const char* kToolVersion = "0.1.0";
const std::vector<std::string> kAnalyticMethods{"classical", "transfer", "impedance"};

struct MethodRun {
  std::string name;
  std::string status = "ok";  // ok | unsupported | error
  std::string reason;
  std::vector<BoundState> states;

  bool ok() const { return status == "ok"; }
};

MethodRun run_method(const std::string& name, const ProfileSpec& spec, int resolution) {
  MethodRun run;
  run.name = name;
  try {
    if (name == "classical") {
      run.states = classical::find_bound_states(spec.profile, spec.units, resolution);
    } else if (name == "transfer") {
      run.states = transfer::find_bound_states(spec.profile, spec.units, resolution);
    } else {
      run.states = impedance::find_bound_states(spec.profile, spec.units, resolution);
    }
  } catch (const UnsupportedProfileError& e) {
    run.status = "unsupported";
    run.reason = e.what();
  } catch (const Error& e) {
    run.status = "error";
    run.reason = e.what();
  }
  return run;
}

ordered_json profile_json(const ProfileSpec& spec) {
  ordered_json j;
  j["boundaries"] = spec.profile.boundaries;
  j["potentials"] = spec.profile.values;
  j["hbar"] = spec.units.hbar;
  j["mass"] = spec.units.mass;
  return j;
}

ordered_json optional_json(const std::optional<double>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

ordered_json run_json(const MethodRun& run) {
  ordered_json j;
  j["status"] = run.status;
  if (!run.ok()) {
    j["reason"] = run.reason;
    return j;
  }
  ordered_json states = ordered_json::array();
  for (const auto& s : run.states) {
    ordered_json st;
    st["index"] = s.index;
    st["method"] = std::string(to_string(s.method));
    st["energy"] = s.energy;
    st["residual"] = s.residual;
    st["norm_constant"] = optional_json(s.norm_constant);
    st["phase"] = optional_json(s.phase);
    states.push_back(std::move(st));
  }
  j["states"] = std::move(states);
  return j;
}

/// Largest |dE| between two ascending lists; +inf when the counts differ.
double max_delta(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

std::vector<double> energies(const std::vector<BoundState>& states) {
  std::vector<double> out;
  out.reserve(states.size());
  for (const auto& s : states) out.push_back(s.energy);
  return out;
}

ordered_json number_or_string(double v) {
  if (std::isfinite(v)) return v;
  return "count mismatch";
}

std::string csv_field(const std::optional<double>& v) { return v ? format_double(*v) : ""; }

ordered_json meta_json(const std::map<std::string, ordered_json>& extra) {
  ordered_json m;
  m["tool"] = kToolName;
  m["version"] = kToolVersion;
  for (const auto& [k, v] : extra) m[k] = v;
  return m;
}

struct PairDelta {
  std::string a;
  std::string b;
  double delta;
};

std::vector<PairDelta> pairwise(const std::vector<MethodRun>& runs) {
  std::vector<PairDelta> out;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    for (std::size_t j = i + 1; j < runs.size(); ++j) {
      if (!runs[i].ok() || !runs[j].ok()) continue;
      out.push_back({runs[i].name, runs[j].name,
                     max_delta(energies(runs[i].states), energies(runs[j].states))});
    }
  }
  return out;
}

}  // namespace

std::string format_double(double value) { return fmt::format("{:.17g}", value); }

CommandResult solve(const ProfileSpec& spec, const SolveOptions& options) {
  CommandResult result;
  std::vector<std::string> names;
  if (options.method == "all") {
    names = kAnalyticMethods;
  } else if (std::find(kAnalyticMethods.begin(), kAnalyticMethods.end(), options.method) !=
             kAnalyticMethods.end()) {
    names = {options.method};
  } else {
    result.exit_code = kExitUsage;
    result.diagnostics = "unknown method '" + options.method +
                         "' (expected classical, transfer, impedance or all)\n";
    return result;
  }
  if (options.resolution < 2) {
    result.exit_code = kExitUsage;
    result.diagnostics = "--resolution must be at least 2\n";
    return result;
  }

  std::vector<MethodRun> runs;
  for (const auto& n : names) runs.push_back(run_method(n, spec, options.resolution));

  std::ostringstream diag;
  bool failed = false;
  for (const auto& r : runs) {
    if (r.status == "error") {
      failed = true;
      diag << r.name << ": " << r.reason << "\n";
    } else if (r.status == "unsupported") {
      diag << r.name << ": unsupported (" << r.reason << ")\n";
      if (names.size() == 1) result.exit_code = kExitUsage;
    }
  }
  const auto deltas = pairwise(runs);
  for (const auto& d : deltas) {
    if (!(d.delta <= kPairwiseTol)) {
      failed = true;
      diag << d.a << " vs " << d.b << ": max |dE| = " << d.delta << " exceeds " << kPairwiseTol
           << "\n";
    }
  }
  if (failed) result.exit_code = kExitNumerical;

  if (options.format == OutFormat::json) {
    ordered_json doc;
    doc["profile"] = profile_json(spec);
    ordered_json methods;
    for (const auto& r : runs) methods[r.name] = run_json(r);
    doc["methods"] = std::move(methods);
    if (names.size() > 1) {
      ordered_json pairs = ordered_json::array();
      for (const auto& d : deltas) {
        pairs.push_back({{"pair", d.a + "-" + d.b},
                         {"max_abs_delta", number_or_string(d.delta)},
                         {"tolerance", kPairwiseTol},
                         {"pass", d.delta <= kPairwiseTol}});
      }
      doc["pairwise"] = std::move(pairs);
    }
    if (options.meta) {
      doc["meta"] = meta_json({{"command", "solve"},
                               {"method", options.method},
                               {"resolution", options.resolution}});
    }
    result.output = doc.dump(2) + "\n";
  } else {
    std::ostringstream out;
    if (names.size() == 1) {
      out << "index,energy,residual,norm_constant,phase\n";
      if (runs[0].ok()) {
        for (const auto& s : runs[0].states) {
          out << s.index << ',' << format_double(s.energy) << ',' << format_double(s.residual)
              << ',' << csv_field(s.norm_constant) << ',' << csv_field(s.phase) << '\n';
        }
      }
    } else {
      std::vector<const MethodRun*> ok;
      for (const auto& r : runs)
        if (r.ok()) ok.push_back(&r);
      out << "index";
      for (const auto* r : ok) out << ',' << r->name;
      out << '\n';
      std::size_t rows = 0;
      for (const auto* r : ok) rows = std::max(rows, r->states.size());
      for (std::size_t i = 0; i < rows; ++i) {
        out << i;
        for (const auto* r : ok) {
          out << ',';
          if (i < r->states.size()) out << format_double(r->states[i].energy);
        }
        out << '\n';
      }
    }
    result.output = out.str();
  }
  result.diagnostics = diag.str();
  return result;
}

CommandResult wavefunction(const ProfileSpec& spec, const WavefunctionOptions& options) {
  CommandResult result;
  const auto& method = options.method;
  if (method != "classical" && method != "impedance" && method != "greens") {
    result.exit_code = kExitUsage;
    result.diagnostics =
        "unknown wavefunction method '" + method + "' (expected classical, impedance or greens)\n";
    return result;
  }
  if (options.samples < 2) {
    result.exit_code = kExitUsage;
    result.diagnostics = "--samples must be at least 2\n";
    return result;
  }
  const auto& profile = spec.profile;
  const auto& units = spec.units;
  if (!profile.is_three_region()) {
    result.exit_code = kExitUsage;
    result.diagnostics = "wavefunction sampling supports three-region wells only\n";
    return result;
  }
  const auto& schedule =
      options.eps_schedule.empty() ? greens::kDefaultEpsSchedule : options.eps_schedule;

  try {
    const auto states = method == "classical"
                            ? classical::find_bound_states(profile, units, options.resolution)
                            : impedance::find_bound_states(profile, units, options.resolution);
    if (options.state_index < 0 ||
        static_cast<std::size_t>(options.state_index) >= states.size()) {
      result.exit_code = kExitUsage;
      result.diagnostics = "state index " + std::to_string(options.state_index) +
                           " out of range: " + std::to_string(states.size()) +
                           " bound state(s) available\n";
      return result;
    }
    const auto& state = states[static_cast<std::size_t>(options.state_index)];
    const double a = profile.region_width(1);
    const double k1 = wavenumber(profile, units, 0, state.energy).magnitude;
    const double k3 = wavenumber(profile, units, 2, state.energy).magnitude;
    const double x_lo = -10.0 / k1;
    const double x_hi = a + 10.0 / k3;

    // psi and density for the impedance-based methods; tails decay from the edge values.
    const double phi = state.phase.value_or(0.0);
    const double k2 = wavenumber(profile, units, 1, state.energy).magnitude;
    const auto in_well_density = [&](double x) {
      if (method == "impedance") return impedance::well_density(profile, units, state, x);
      const double inset = 1e-9 * a;
      const double xs = std::clamp(x, inset, a - inset);
      return greens::eigenfunction_density(profile, units, xs, state.energy, schedule);
    };
    const auto sample = [&](double x) -> std::pair<double, double> {
      if (method == "classical") {
        const double psi = classical::wavefunction(profile, units, state, x);
        return {psi, psi * psi};
      }
      if (x < 0.0) {
        const double d0 = in_well_density(0.0);
        const double psi0 = std::copysign(std::sqrt(d0), std::cos(phi));
        return {psi0 * std::exp(k1 * x), d0 * std::exp(2.0 * k1 * x)};
      }
      if (x > a) {
        const double da = in_well_density(a);
        const double psia = std::copysign(std::sqrt(da), std::cos(k2 * a + phi));
        return {psia * std::exp(-k3 * (x - a)), da * std::exp(-2.0 * k3 * (x - a))};
      }
      const double d = in_well_density(x);
      return {std::copysign(std::sqrt(std::max(d, 0.0)), std::cos(k2 * x + phi)), d};
    };

    std::ostringstream out;
    out << "x,psi,density\n";
    const int n = options.samples;
    for (int i = 0; i < n; ++i) {
      const double x =
          i == n - 1 ? x_hi : x_lo + (x_hi - x_lo) * static_cast<double>(i) / (n - 1);
      const auto [psi, density] = sample(x);
      out << format_double(x) << ',' << format_double(psi) << ',' << format_double(density)
          << '\n';
    }
    result.output = out.str();
  } catch (const Error& e) {
    result.exit_code = kExitNumerical;
    result.diagnostics = std::string(e.what()) + "\n";
  }
  return result;
}

CommandResult compare(const ProfileSpec& spec, const CompareOptions& options) {
  CommandResult result;
  if (options.resolution < 2 || options.oracle_points < 64) {
    result.exit_code = kExitUsage;
    result.diagnostics = "--resolution must be >= 2 and --oracle-points >= 64\n";
    return result;
  }
  // Methods run concurrently; the report is assembled in a fixed order afterwards.
  std::vector<std::future<MethodRun>> pending;
  for (const auto& n : kAnalyticMethods) {
    pending.push_back(std::async(std::launch::async, run_method, n, std::cref(spec),
                                 options.resolution));
  }
  auto oracle_future = std::async(std::launch::async, [&] {
    oracle::OracleOptions o;
    o.n_points = options.oracle_points;
    return oracle::solve(spec.profile, spec.units, o);
  });
  std::vector<MethodRun> runs;
  for (auto& f : pending) runs.push_back(f.get());
  std::vector<oracle::OracleState> oracle_states;
  std::string oracle_error;
  try {
    oracle_states = oracle_future.get();
  } catch (const Error& e) {
    oracle_error = e.what();
  }
  std::vector<double> oracle_energies;
  for (const auto& s : oracle_states) oracle_energies.push_back(s.energy);

  bool pass = oracle_error.empty();
  std::ostringstream diag;
  if (!oracle_error.empty()) diag << "oracle: " << oracle_error << "\n";
  for (const auto& r : runs) {
    if (r.status == "error") {
      pass = false;
      diag << r.name << ": " << r.reason << "\n";
    }
  }
  const auto deltas = pairwise(runs);
  for (const auto& d : deltas) pass = pass && d.delta <= kPairwiseTol;

  struct OracleDelta {
    std::string method;
    double delta;
  };
  std::vector<OracleDelta> oracle_deltas;
  for (const auto& r : runs) {
    if (!r.ok() || !oracle_error.empty()) continue;
    const double d = max_delta(energies(r.states), oracle_energies);
    oracle_deltas.push_back({r.name, d});
    pass = pass && d <= kOracleTol;
  }

  // Closed-form normalization against the term-by-term integral, classical states only.
  ordered_json norm_checks = ordered_json::array();
  for (const auto& r : runs) {
    if (r.name != "classical" || !r.ok()) continue;
    for (const auto& s : r.states) {
      const double closed = classical::inverse_norm_closed_form(spec.profile, spec.units, s.energy);
      const double integral =
          classical::inverse_norm_integral_form(spec.profile, spec.units, s.energy);
      const double rel = std::abs(closed - integral) / std::abs(integral);
      const bool ok = rel <= kPairwiseTol;
      pass = pass && ok;
      norm_checks.push_back({{"index", s.index}, {"relative_difference", rel}, {"pass", ok}});
    }
  }

  std::size_t count = oracle_states.size();
  for (const auto& r : runs)
    if (r.ok()) count = std::max(count, r.states.size());
  const std::string verdict = pass ? "PASS" : "FAIL";
  const std::string summary =
      count == 0 && pass ? "0 states, trivially consistent"
                         : std::to_string(count) + " state(s), " + (pass ? "consistent" : "inconsistent");
  diag << verdict << ": " << summary << "\n";

  if (options.format == OutFormat::json) {
    ordered_json doc;
    doc["profile"] = profile_json(spec);
    ordered_json methods;
    for (const auto& r : runs) methods[r.name] = run_json(r);
    ordered_json o;
    if (oracle_error.empty()) {
      o["status"] = "ok";
      o["energies"] = oracle_energies;
      std::vector<bool> warnings;
      for (const auto& s : oracle_states) warnings.push_back(s.margin_warning);
      o["margin_warnings"] = warnings;
    } else {
      o["status"] = "error";
      o["reason"] = oracle_error;
    }
    methods["oracle"] = std::move(o);
    doc["methods"] = std::move(methods);
    ordered_json pairs = ordered_json::array();
    for (const auto& d : deltas) {
      pairs.push_back({{"pair", d.a + "-" + d.b},
                       {"max_abs_delta", number_or_string(d.delta)},
                       {"tolerance", kPairwiseTol},
                       {"pass", d.delta <= kPairwiseTol}});
    }
    doc["pairwise"] = std::move(pairs);
    ordered_json od = ordered_json::array();
    for (const auto& d : oracle_deltas) {
      od.push_back({{"method", d.method},
                    {"max_abs_delta", number_or_string(d.delta)},
                    {"tolerance", kOracleTol},
                    {"pass", d.delta <= kOracleTol}});
    }
    doc["oracle_deltas"] = std::move(od);
    doc["normalization_checks"] = std::move(norm_checks);
    doc["verdict"] = verdict;
    doc["summary"] = summary;
    if (options.meta) {
      doc["meta"] = meta_json({{"command", "compare"},
                               {"resolution", options.resolution},
                               {"oracle_points", options.oracle_points}});
    }
    result.output = doc.dump(2) + "\n";
  } else {
    std::ostringstream out;
    std::vector<const MethodRun*> ok;
    for (const auto& r : runs)
      if (r.ok()) ok.push_back(&r);
    out << "index";
    for (const auto* r : ok) out << ',' << r->name;
    out << ",oracle\n";
    for (std::size_t i = 0; i < count; ++i) {
      out << i;
      for (const auto* r : ok) {
        out << ',';
        if (i < r->states.size()) out << format_double(r->states[i].energy);
      }
      out << ',';
      if (i < oracle_energies.size()) out << format_double(oracle_energies[i]);
      out << '\n';
    }
    result.output = out.str();
  }
  result.diagnostics = diag.str();
  result.exit_code = pass ? kExitOk : kExitNumerical;
  return result;
}

}  // namespace qwi::cli
