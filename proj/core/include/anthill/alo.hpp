#pragma once

#include <cstdint>
#include <string>

#include "anthill/objectives.hpp"
#include "anthill/rng.hpp"
#include "anthill/trace.hpp"

namespace anthill {

struct AloConfig {
  int population = 20;  // antlion count; an equal number of ants walk
  int max_iterations = 100;
  std::uint64_t seed = 1;

  void validate() const;
  std::string echo() const;
};

namespace alo_detail {

// Boundary-shrink ratio: 1 early on, then 1 + 10^w * (t / max_iterations)
// with w stepping through 2..6 as t crosses 10%, 50%, 75%, 90%, 95% of the
// run. Requires 1 <= t <= max_iterations.
double shrink_ratio(int t, int max_iterations);

// One coordinate of a bounded random walk: a +-1 cumulative walk of
// max_iterations steps, min-max normalized into the shrunken interval
// around `anchor` and sampled at step t. Each call draws two interval
// orientation flips plus max_iterations walk steps. The result always lies
// within anchor +- max(|lo|, |hi|) / shrink_ratio(t, max_iterations).
double random_walk_position(Rng& rng, int t, int max_iterations,
                            double anchor, double lo, double hi);

}  // namespace alo_detail

// Antlion optimizer baseline. Each iteration every ant walks around a
// roulette-selected antlion (weights 1 / (1 + f - f_best), guarding the
// division) and around the elite, landing at the midpoint; ants and
// antlions are then pooled and the best half survive, with the elite
// replacing the top antlion. The trace records the elite every iteration.
RunResult run_alo(const AloConfig& config, const Objective& objective);

}  // namespace anthill
