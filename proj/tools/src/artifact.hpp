#pragma once

#include <optional>
#include <string>
#include <vector>

#include "anthill/objectives.hpp"
#include "anthill/trace.hpp"

namespace anthill::tool {

// Everything needed to rebuild the objective a run optimized, so a saved
// artifact can be re-verified later.
struct ProblemSpec {
  std::string kind;  // "bowl" | "tangential_bowl" | "sll"
  std::size_t dimension = 0;
  double box_lo = 0.0;
  double box_hi = 0.0;
  std::optional<SynthesisSpec> synthesis;  // kind == "sll"
};

Objective objective_from_problem(const ProblemSpec& problem);

// Self-describing record of one optimizer run. `recheck_fitness` is the
// cost of best_vector re-evaluated on a freshly built objective; the run is
// trustworthy only when it reproduces best_fitness exactly.
struct RunArtifact {
  std::string tool = "anthill";
  std::string version;
  std::string algo;
  std::uint64_t seed = 0;
  std::string config_echo;
  ProblemSpec problem;
  std::vector<double> best_vector;
  double best_fitness = 0.0;
  double recheck_fitness = 0.0;
  int iterations = 0;
  double duration_seconds = 0.0;
  std::vector<TraceEntry> trace;

  // Amplitude-mode synthesis runs also store the decoded design.
  std::vector<double> decoded_amplitudes;
  std::vector<double> decoded_positions;
};

std::string to_json(const RunArtifact& artifact);

// Throws std::invalid_argument on malformed or schema-violating JSON.
RunArtifact from_json(const std::string& text);

// Throws std::runtime_error on I/O failure.
void save(const RunArtifact& artifact, const std::string& path);
RunArtifact load(const std::string& path);

// Rebuilds the objective from the stored problem and re-evaluates
// best_vector; true when the cost reproduces best_fitness bit for bit.
bool self_check(const RunArtifact& artifact);

}  // namespace anthill::tool
