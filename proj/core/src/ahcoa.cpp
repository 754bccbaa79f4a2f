#include "anthill/ahcoa.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "anthill/format.hpp"
#include "anthill/packing.hpp"

namespace anthill {

LayerShape LayerShape::rectangular_solid(double length, double width,
                                         double height) {
  return {LayerShapeKind::rectangular_solid, length, width, height};
}
LayerShape LayerShape::prism(double base_area, double height) {
  return {LayerShapeKind::prism, base_area, height, 0.0};
}
LayerShape LayerShape::pyramid(double base_area, double height) {
  return {LayerShapeKind::pyramid, base_area, height, 0.0};
}
LayerShape LayerShape::cone(double radius, double height) {
  return {LayerShapeKind::cone, radius, height, 0.0};
}

double layer_volume(const LayerShape& shape) {
  auto need_positive = [](double x) {
    if (!std::isfinite(x) || x <= 0.0)
      throw std::domain_error("layer dimensions must be positive");
    return x;
  };
  switch (shape.kind) {
    case LayerShapeKind::rectangular_solid:
      return need_positive(shape.a) * need_positive(shape.b) *
             need_positive(shape.c);
    case LayerShapeKind::prism:
      return need_positive(shape.a) * need_positive(shape.b);
    case LayerShapeKind::pyramid:
      return need_positive(shape.a) * need_positive(shape.b) / 3.0;
    case LayerShapeKind::cone: {
      const double r = need_positive(shape.a);
      const double h = need_positive(shape.b);
      return std::numbers::pi * r * r * h / 3.0;
    }
  }
  throw std::domain_error("unknown layer shape");
}

void AhcoaConfig::validate() const {
  if (population < 2)
    throw std::invalid_argument("population must be at least 2");
  if (max_iterations < 0)
    throw std::invalid_argument("max_iterations must be non-negative");
  if (!std::isfinite(budget) || budget <= 0.0)
    throw std::invalid_argument("layer budget must be positive");
  if (epoch_length < 1)
    throw std::invalid_argument("epoch_length must be at least 1");
  if (!std::isfinite(contraction) || contraction <= 0.0 || contraction >= 1.0)
    throw std::invalid_argument("contraction must lie in (0, 1)");
  if (!std::isfinite(sigma_fraction) || sigma_fraction <= 0.0)
    throw std::invalid_argument("sigma_fraction must be positive");
}

std::string AhcoaConfig::echo() const {
  return "population=" + std::to_string(population) +
         " max_iterations=" + std::to_string(max_iterations) +
         " budget=" + format_double(budget) +
         " epoch_length=" + std::to_string(epoch_length) +
         " contraction=" + format_double(contraction) +
         " sigma_fraction=" + format_double(sigma_fraction) +
         " seed=" + std::to_string(seed);
}

std::vector<std::vector<int>> construct_layers(
    const std::vector<double>& magnitudes, double budget) {
  if (!std::isfinite(budget) || budget <= 0.0)
    throw std::invalid_argument("layer budget must be positive");
  double peak = 0.0;
  for (double m : magnitudes) {
    if (!std::isfinite(m) || m < 0.0)
      throw std::invalid_argument("magnitudes must be non-negative");
    peak = std::max(peak, m);
  }

  PackingInstance inst;
  inst.capacity = budget;
  inst.sizes = magnitudes;
  if (peak > budget) {
    const double scale = budget / peak;
    for (double& s : inst.sizes) s *= scale;
  }
  return next_fit(inst).bins;
}

Colony init_colony(const AhcoaConfig& config, const Objective& objective) {
  config.validate();
  objective.validate();

  Colony colony{.hills = {},
                .elite = {},
                .elite_fitness = std::numeric_limits<double>::infinity(),
                .iteration = 0,
                .config = config,
                .rng = Rng(config.seed),
                .trace = {},
                .non_finite_rejections = 0};
  colony.trace.seed = config.seed;
  colony.trace.config_echo = config.echo();

  const std::size_t dim = objective.dimension;
  colony.hills.resize(static_cast<std::size_t>(config.population));
  for (auto& hill : colony.hills) {
    hill.position.resize(dim);
    for (std::size_t d = 0; d < dim; ++d)
      hill.position[d] =
          colony.rng.uniform(objective.bounds[d].lo, objective.bounds[d].hi);
  }
  for (auto& hill : colony.hills) {
    double f = objective.evaluate(hill.position);
    if (!std::isfinite(f)) {
      f = std::numeric_limits<double>::infinity();
      ++colony.non_finite_rejections;
    }
    hill.fitness = f;
    if (f < colony.elite_fitness) {
      colony.elite_fitness = f;
      colony.elite = hill.position;
    }
  }
  if (colony.elite.empty())  // every initial cost non-finite; keep hill 0
    colony.elite = colony.hills.front().position;
  return colony;
}

void step(Colony& colony, const Objective& objective) {
  const std::size_t dim = objective.dimension;
  const double shrink =
      std::pow(colony.config.contraction,
               colony.iteration / colony.config.epoch_length);

  // Pre-pass: all randomness for this iteration, hill-major then
  // dimension-major; per pair one magnitude draw then one sign draw.
  const std::size_t hills = colony.hills.size();
  std::vector<std::vector<double>> mags(hills, std::vector<double>(dim));
  std::vector<std::vector<double>> signs(hills, std::vector<double>(dim));
  for (std::size_t h = 0; h < hills; ++h) {
    for (std::size_t d = 0; d < dim; ++d) {
      const double width = objective.bounds[d].hi - objective.bounds[d].lo;
      const double sigma = colony.config.sigma_fraction * width * shrink;
      mags[h][d] = std::abs(colony.rng.normal(sigma));
      signs[h][d] = colony.rng.coin() ? 1.0 : -1.0;
    }
  }

  std::vector<double> candidate(dim);
  for (std::size_t h = 0; h < hills; ++h) {
    auto& hill = colony.hills[h];
    hill.layers = construct_layers(mags[h], colony.config.budget);

    candidate = hill.position;
    double attenuation = 1.0;
    for (const auto& layer : hill.layers) {
      for (int d : layer) {
        const auto u = static_cast<std::size_t>(d);
        const double moved =
            candidate[u] + signs[h][u] * mags[h][u] * attenuation;
        candidate[u] =
            std::clamp(moved, objective.bounds[u].lo, objective.bounds[u].hi);
      }
      attenuation /= 3.0;
    }

    const double f = objective.evaluate(candidate);
    if (!std::isfinite(f)) {
      ++colony.non_finite_rejections;
      continue;
    }
    if (f < hill.fitness) {
      hill.position = candidate;
      hill.fitness = f;
    }
    if (f < colony.elite_fitness) {
      colony.elite_fitness = f;
      colony.elite = candidate;
    }
  }

  ++colony.iteration;
  colony.trace.entries.push_back({colony.iteration, colony.elite_fitness});
}

RunResult run_ahcoa(const AhcoaConfig& config, const Objective& objective) {
  Colony colony = init_colony(config, objective);
  for (int t = 0; t < config.max_iterations; ++t) step(colony, objective);

  RunResult result;
  result.best_vector = std::move(colony.elite);
  result.best_fitness = colony.elite_fitness;
  result.trace = std::move(colony.trace);
  return result;
}

}  // namespace anthill
