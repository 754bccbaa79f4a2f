#pragma once

#include <cstdint>
#include <string>

#include "anthill/objectives.hpp"
#include "anthill/trace.hpp"

namespace anthill {

struct PsoConfig {
  int population = 30;
  int max_iterations = 200;
  double inertia = 0.729;
  double cognitive = 1.49445;
  double social = 1.49445;
  double velocity_clamp = 0.2;  // as a fraction of each box width
  std::uint64_t seed = 1;

  void validate() const;
  std::string echo() const;
};

// Global-best particle swarm baseline. Particles start uniformly in the box
// with zero velocity; each iteration applies the standard velocity update
// with two fresh uniform draws per dimension (synchronous: the global best
// from the previous iteration steers all particles), clamps velocity to
// velocity_clamp times the box width and position to the box. The trace
// records the global best every iteration.
RunResult run_pso(const PsoConfig& config, const Objective& objective);

}  // namespace anthill
