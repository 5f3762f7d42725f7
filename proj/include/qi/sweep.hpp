#pragma once

// Parameter-sweep driver behind the command line tool.  A sweep is described
// by a JSON config file naming a task and its grids; running one produces a
// data file (csv or jsonl) plus a manifest.json in the output directory.
// Output bytes are deterministic for a fixed config so reruns can be compared
// directly; the manifest carries the wall time and is excluded from that.

#include <stdexcept>
#include <string>
#include <vector>

namespace qi {

// Raised for malformed or inconsistent configs (unknown task, empty grid,
// non-monotone grid, parameters out of the supported range).
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a computation fails numerically (diagonalization failure,
// non-convergence).  Distinct from ConfigError so the CLI can map the two
// to different exit codes.
struct NumericalError : std::runtime_error {
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

struct SweepOutcome {
  std::string task;
  std::string config_hash;            // FNV-1a 64-bit hash of the config bytes
  std::vector<std::string> files;     // data files written (relative to out dir)
  double wall_seconds = 0.0;
};

// Validates the config and reports diagnostics: the task, resolved grid
// sizes, and a rough cost estimate (number of records).  Throws ConfigError
// if the config cannot be run.
std::string validate_config(const std::string& config_path);

// Runs the sweep described by config_path.  format_override and
// threads_override, when non-empty / positive, win over the config file.
// Writes the data file(s) and manifest.json under out_dir (created if
// missing) and returns what was written.
SweepOutcome run_sweep(const std::string& config_path, const std::string& out_dir,
                       const std::string& format_override = "", int threads_override = 0);

// Hash used for config identification in output metadata.
std::string fnv1a64_hex(const std::string& bytes);

}  // namespace qi
