#include "anthill/alo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "anthill/format.hpp"

namespace anthill {

void AloConfig::validate() const {
  if (population < 2)
    throw std::invalid_argument("population must be at least 2");
  if (max_iterations < 0)
    throw std::invalid_argument("max_iterations must be non-negative");
}

std::string AloConfig::echo() const {
  return "population=" + std::to_string(population) +
         " max_iterations=" + std::to_string(max_iterations) +
         " seed=" + std::to_string(seed);
}

namespace alo_detail {

double shrink_ratio(int t, int max_iterations) {
  if (t < 1 || t > max_iterations)
    throw std::invalid_argument("iteration outside 1..max_iterations");
  const double progress =
      static_cast<double>(t) / static_cast<double>(max_iterations);
  double ratio = 1.0;
  if (progress > 0.10) ratio = 1.0 + 1e2 * progress;
  if (progress > 0.50) ratio = 1.0 + 1e3 * progress;
  if (progress > 0.75) ratio = 1.0 + 1e4 * progress;
  if (progress > 0.90) ratio = 1.0 + 1e5 * progress;
  if (progress > 0.95) ratio = 1.0 + 1e6 * progress;
  return ratio;
}

double random_walk_position(Rng& rng, int t, int max_iterations,
                            double anchor, double lo, double hi) {
  const double ratio = shrink_ratio(t, max_iterations);
  double c = lo / ratio;
  double d = hi / ratio;
  c = rng.uniform01() < 0.5 ? c + anchor : -c + anchor;
  d = rng.uniform01() < 0.5 ? d + anchor : -d + anchor;

  // Cumulative +-1 walk over the whole run, sampled at step t.
  int x = 0;
  int walk_min = 0, walk_max = 0, at_t = 0;
  for (int k = 1; k <= max_iterations; ++k) {
    x += rng.uniform01() > 0.5 ? 1 : -1;
    walk_min = std::min(walk_min, x);
    walk_max = std::max(walk_max, x);
    if (k == t) at_t = x;
  }
  const double span = static_cast<double>(walk_max - walk_min);  // >= 1
  return (static_cast<double>(at_t - walk_min) / span) * (d - c) + c;
}

}  // namespace alo_detail

namespace {

struct Agent {
  std::vector<double> position;
  double fitness = std::numeric_limits<double>::infinity();
};

std::size_t roulette_select(Rng& rng, const std::vector<Agent>& antlions) {
  const double f_best = antlions.front().fitness;
  std::vector<double> weights(antlions.size());
  double total = 0.0;
  for (std::size_t i = 0; i < antlions.size(); ++i) {
    const double denom = 1.0 + antlions[i].fitness - f_best;
    weights[i] = denom > 0.0 && std::isfinite(denom) ? 1.0 / denom : 0.0;
    total += weights[i];
  }
  if (total <= 0.0) return 0;
  const double r = rng.uniform01() * total;
  double acc = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    acc += weights[i];
    if (r < acc) return i;
  }
  return weights.size() - 1;
}

}  // namespace

RunResult run_alo(const AloConfig& config, const Objective& objective) {
  config.validate();
  objective.validate();

  Rng rng(config.seed);
  const std::size_t dim = objective.dimension;
  const auto n = static_cast<std::size_t>(config.population);

  auto fresh_agent = [&]() {
    Agent a;
    a.position.resize(dim);
    for (std::size_t d = 0; d < dim; ++d)
      a.position[d] =
          rng.uniform(objective.bounds[d].lo, objective.bounds[d].hi);
    return a;
  };
  auto safe_eval = [&](const std::vector<double>& v) {
    const double f = objective.evaluate(v);
    return std::isfinite(f) ? f : std::numeric_limits<double>::infinity();
  };

  std::vector<Agent> antlions(n);
  std::vector<Agent> ants(n);
  for (auto& a : antlions) a = fresh_agent();
  for (auto& a : ants) a = fresh_agent();
  for (auto& a : antlions) a.fitness = safe_eval(a.position);
  for (auto& a : ants) a.fitness = safe_eval(a.position);

  std::stable_sort(antlions.begin(), antlions.end(),
                   [](const Agent& a, const Agent& b) {
                     return a.fitness < b.fitness;
                   });
  Agent elite = antlions.front();

  ConvergenceTrace trace;
  trace.seed = config.seed;
  trace.config_echo = config.echo();

  for (int t = 1; t <= config.max_iterations; ++t) {
    for (auto& ant : ants) {
      const std::size_t sel = roulette_select(rng, antlions);
      for (std::size_t d = 0; d < dim; ++d) {
        const double lo = objective.bounds[d].lo;
        const double hi = objective.bounds[d].hi;
        const double around_selected = alo_detail::random_walk_position(
            rng, t, config.max_iterations, antlions[sel].position[d], lo, hi);
        const double around_elite = alo_detail::random_walk_position(
            rng, t, config.max_iterations, elite.position[d], lo, hi);
        ant.position[d] =
            std::clamp(0.5 * (around_selected + around_elite), lo, hi);
      }
      ant.fitness = safe_eval(ant.position);
    }

    // Survival of the fittest across both populations; ties keep the
    // incumbent antlions ahead of the new ants.
    std::vector<Agent> pool;
    pool.reserve(2 * n);
    pool.insert(pool.end(), antlions.begin(), antlions.end());
    pool.insert(pool.end(), ants.begin(), ants.end());
    std::stable_sort(pool.begin(), pool.end(),
                     [](const Agent& a, const Agent& b) {
                       return a.fitness < b.fitness;
                     });
    pool.resize(n);
    antlions = std::move(pool);

    if (antlions.front().fitness < elite.fitness) elite = antlions.front();
    antlions.front() = elite;

    trace.entries.push_back({t, elite.fitness});
  }

  RunResult result;
  result.best_vector = elite.position;
  result.best_fitness = elite.fitness;
  result.trace = std::move(trace);
  return result;
}

}  // namespace anthill
