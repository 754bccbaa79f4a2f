#include "anthill/pso.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "anthill/format.hpp"
#include "anthill/rng.hpp"

namespace anthill {

void PsoConfig::validate() const {
  if (population < 2)
    throw std::invalid_argument("population must be at least 2");
  if (max_iterations < 0)
    throw std::invalid_argument("max_iterations must be non-negative");
  if (!std::isfinite(inertia) || inertia <= 0.0 || inertia > 1.0)
    throw std::invalid_argument("inertia must lie in (0, 1]");
  if (!std::isfinite(cognitive) || cognitive < 0.0 || !std::isfinite(social) ||
      social < 0.0)
    throw std::invalid_argument("acceleration weights must be non-negative");
  if (!std::isfinite(velocity_clamp) || velocity_clamp <= 0.0 ||
      velocity_clamp > 1.0)
    throw std::invalid_argument("velocity clamp must lie in (0, 1]");
}

std::string PsoConfig::echo() const {
  return "population=" + std::to_string(population) +
         " max_iterations=" + std::to_string(max_iterations) +
         " inertia=" + format_double(inertia) +
         " cognitive=" + format_double(cognitive) +
         " social=" + format_double(social) +
         " velocity_clamp=" + format_double(velocity_clamp) +
         " seed=" + std::to_string(seed);
}

RunResult run_pso(const PsoConfig& config, const Objective& objective) {
  config.validate();
  objective.validate();

  Rng rng(config.seed);
  const std::size_t dim = objective.dimension;
  const auto n = static_cast<std::size_t>(config.population);

  auto safe_eval = [&](const std::vector<double>& v) {
    const double f = objective.evaluate(v);
    return std::isfinite(f) ? f : std::numeric_limits<double>::infinity();
  };

  std::vector<std::vector<double>> pos(n, std::vector<double>(dim));
  std::vector<std::vector<double>> vel(n, std::vector<double>(dim, 0.0));
  for (auto& p : pos)
    for (std::size_t d = 0; d < dim; ++d)
      p[d] = rng.uniform(objective.bounds[d].lo, objective.bounds[d].hi);

  std::vector<std::vector<double>> pbest = pos;
  std::vector<double> pbest_fit(n);
  std::size_t gbest = 0;
  for (std::size_t i = 0; i < n; ++i) {
    pbest_fit[i] = safe_eval(pos[i]);
    if (pbest_fit[i] < pbest_fit[gbest]) gbest = i;
  }
  std::vector<double> gbest_pos = pbest[gbest];
  double gbest_fit = pbest_fit[gbest];

  ConvergenceTrace trace;
  trace.seed = config.seed;
  trace.config_echo = config.echo();

  for (int t = 1; t <= config.max_iterations; ++t) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t d = 0; d < dim; ++d) {
        const double lo = objective.bounds[d].lo;
        const double hi = objective.bounds[d].hi;
        const double vmax = config.velocity_clamp * (hi - lo);
        const double r1 = rng.uniform01();
        const double r2 = rng.uniform01();
        double v = config.inertia * vel[i][d] +
                   config.cognitive * r1 * (pbest[i][d] - pos[i][d]) +
                   config.social * r2 * (gbest_pos[d] - pos[i][d]);
        v = std::clamp(v, -vmax, vmax);
        vel[i][d] = v;
        pos[i][d] = std::clamp(pos[i][d] + v, lo, hi);
      }
      const double f = safe_eval(pos[i]);
      if (f < pbest_fit[i]) {
        pbest_fit[i] = f;
        pbest[i] = pos[i];
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (pbest_fit[i] < gbest_fit) {
        gbest_fit = pbest_fit[i];
        gbest_pos = pbest[i];
      }
    }
    trace.entries.push_back({t, gbest_fit});
  }

  RunResult result;
  result.best_vector = std::move(gbest_pos);
  result.best_fitness = gbest_fit;
  result.trace = std::move(trace);
  return result;
}

}  // namespace anthill
