#pragma once

// Orchestration behind the `susyq` command line: validation, construction of
// the partner, oracle verification and the report / CSV artifacts.

#include <optional>
#include <string>
#include <vector>

#include "susyq/config.hpp"

namespace susyq {

enum class Command { run, validate, spectrum };

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int violation = 2;
inline constexpr int numerical = 3;
inline constexpr int config = 64;  // EX_USAGE
inline constexpr int io = 74;      // EX_IOERR
}  // namespace exit_code

/// Agreement required between predicted and oracle eigenvalues.
inline constexpr double spectrum_tolerance = 5e-3;
/// Bound on the eigen-residual of every reported state.
inline constexpr double residual_tolerance = 1e-4;
/// Isospectral states written to states.csv (n = 0 .. count-1).
inline constexpr int isospectral_states = 4;

struct Artifacts {
  std::string report_json;
  std::optional<std::string> potential_csv;
  std::optional<std::string> states_csv;
  int exit_code = exit_code::ok;
};

/// Runs one command. Never throws for numerical problems; those end up in the
/// report with exit code 3. Throws config_error for an unusable plan.
Artifacts execute(Command command, const PlanConfig& config);

/// Writes report.json / potential.csv / states.csv into the directory
/// (created if needed). Throws std::runtime_error on I/O failure.
void write_artifacts(const Artifacts& artifacts, const std::string& output_dir);

/// 12 significant digits, scientific.
std::string format_csv(double v);

/// v rounded to 12 significant digits.
double round12(double v);

}  // namespace susyq
