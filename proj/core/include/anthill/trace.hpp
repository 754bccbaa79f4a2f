#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace anthill {

struct TraceEntry {
  int iteration = 0;
  double elite_fitness = 0.0;
};

// Per-iteration record of the best fitness seen so far, plus enough context
// (seed, flattened config) to replay the run.
struct ConvergenceTrace {
  std::vector<TraceEntry> entries;
  std::uint64_t seed = 0;
  std::string config_echo;

  // Throws std::invalid_argument unless iterations are strictly increasing
  // and elite fitness never rises.
  void validate() const;
};

struct RunResult {
  std::vector<double> best_vector;
  double best_fitness = 0.0;
  ConvergenceTrace trace;
};

// Log line styles used by the optimizers' progress output. Byte-stable:
// the fitness is rendered with the shortest round-tripping decimal.
//   elite style:     "At iteration {i}\tthe elite fitness is {g}"
//   iteration style: "Iteration# {i}\t{g}"
std::string format_elite_log_line(int iteration, double elite_fitness);
std::string format_iteration_log_line(int iteration, double fitness);

// Writes one line per entry (newline-terminated). stride > 1 keeps only
// entries whose iteration is a multiple of it.
void write_elite_log(std::ostream& os, const ConvergenceTrace& trace,
                     int stride = 1);
void write_iteration_log(std::ostream& os, const ConvergenceTrace& trace);

}  // namespace anthill
