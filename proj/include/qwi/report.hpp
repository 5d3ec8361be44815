#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qwi/oracle.hpp"
#include "qwi/profile_io.hpp"
#include "qwi/roots.hpp"

// The three CLI commands as library calls. Each returns the text to emit and the process
// exit code: 0 success, 1 usage or input problem, 2 numerical failure or tolerance miss.

namespace qwi::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitNumerical = 2;

/// Pairwise tolerance between the analytic methods, and against the oracle.
inline constexpr double kPairwiseTol = 1e-10;
inline constexpr double kOracleTol = 1e-4;

enum class OutFormat { json, csv };

struct CommandResult {
  int exit_code = kExitOk;
  std::string output;       ///< data for stdout or --out
  std::string diagnostics;  ///< human-readable messages for stderr
};

struct SolveOptions {
  std::string method = "all";  ///< classical | transfer | impedance | all
  OutFormat format = OutFormat::json;
  int resolution = kDefaultResolution;
  bool meta = true;
};

CommandResult solve(const ProfileSpec& spec, const SolveOptions& options);

struct WavefunctionOptions {
  int state_index = 0;
  int samples = 201;
  std::string method = "classical";  ///< classical | impedance | greens
  std::vector<double> eps_schedule;  ///< empty selects the default schedule
  int resolution = kDefaultResolution;
};

/// CSV with columns x, psi, density over the well plus 10/kappa tails on each side.
CommandResult wavefunction(const ProfileSpec& spec, const WavefunctionOptions& options);

struct CompareOptions {
  OutFormat format = OutFormat::json;
  int resolution = kDefaultResolution;
  std::size_t oracle_points = oracle::kDefaultPoints;
  bool meta = true;
};

/// All three methods plus the oracle, with pairwise and oracle deltas and a verdict.
CommandResult compare(const ProfileSpec& spec, const CompareOptions& options);

/// "%.17g": round-trip-exact, '.' decimal separator regardless of locale.
std::string format_double(double value);

}  // namespace qwi::cli
