#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace anthill::tool {

// Exit-code mapping (see main): usage 2, I/O 1, self-check 3.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SelfCheckError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Resolves an output path: absolute paths pass through, relative ones land
// under ANTHILL_OUT_DIR when that is set (created if missing), else under
// the current directory.
std::string resolve_output_path(const std::string& path);

struct PatternArgs {
  int elements = 10;
  double spacing = 0.5;
  std::vector<double> amplitudes;  // empty = uniform
  std::vector<double> phases;      // empty = zero
  std::vector<double> positions;   // overrides elements/spacing when set
  double grid_start = 0.0;
  double grid_end = 180.0;
  double grid_step = 0.05;
  double floor_db = -60.0;
  std::string out;  // empty = stdout
};
int cmd_pattern(const PatternArgs& args);

struct MetricsArgs {
  std::string in;  // pattern CSV path, "-" = stdin; empty = compute
  int elements = 10;
  double spacing = 0.5;
  double grid_step = 0.05;
  double floor_db = -60.0;
  std::string out;  // empty = stdout
};
int cmd_metrics(const MetricsArgs& args);

struct OptimizeArgs {
  std::string config_path;  // INI file; flags below override it
  std::string algo;         // ahcoa | alo | pso
  std::string objective;    // bowl | tangential_bowl | sll
  std::optional<int> dimension;
  std::optional<double> box_lo;
  std::optional<double> box_hi;
  std::optional<int> population;
  std::optional<int> iterations;
  std::optional<std::uint64_t> seed;
  std::string artifact_path;  // empty = run_artifact.json in the out dir
  bool quiet = false;         // suppress the progress log lines
};
int cmd_optimize(const OptimizeArgs& args);

struct BenchArgs {
  std::string suite = "all";  // lobes | fnbw | packing | all
  std::string out_dir;        // empty = ANTHILL_OUT_DIR or cwd
};
int cmd_bench(const BenchArgs& args);

}  // namespace anthill::tool
