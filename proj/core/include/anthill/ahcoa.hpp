#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "anthill/objectives.hpp"
#include "anthill/rng.hpp"
#include "anthill/trace.hpp"

namespace anthill {

// Volumetric bookkeeping for the construction heuristic. Tapered shapes
// (pyramid, cone) hold a third of their straight-walled counterparts, which
// is where the per-layer 1/3 step attenuation comes from.
enum class LayerShapeKind { rectangular_solid, prism, pyramid, cone };

struct LayerShape {
  LayerShapeKind kind = LayerShapeKind::rectangular_solid;
  double a = 0.0;  // length | base area | base area | radius
  double b = 0.0;  // width  | height    | height    | height
  double c = 0.0;  // height | unused    | unused    | unused

  static LayerShape rectangular_solid(double length, double width,
                                      double height);
  static LayerShape prism(double base_area, double height);
  static LayerShape pyramid(double base_area, double height);
  static LayerShape cone(double radius, double height);
};

// Enclosed volume; throws std::domain_error when a used dimension is not a
// positive finite number.
double layer_volume(const LayerShape& shape);

struct AhcoaConfig {
  int population = 20;
  int max_iterations = 1000;
  double budget = 1.0;       // layer capacity for the construction packing
  int epoch_length = 10;     // iterations between step-size contractions
  double contraction = 0.85;
  double sigma_fraction = 0.25;  // initial step sigma per box width
  std::uint64_t seed = 1;

  void validate() const;
  std::string echo() const;  // flat key=value line, fields in declared order
};

// One candidate under construction. `layers` holds, per layer, the decision
// dimensions whose perturbation magnitudes were packed together on the last
// construction pass (attempted moves included).
struct Hill {
  std::vector<double> position;
  double fitness = 0.0;
  std::vector<std::vector<int>> layers;
};

struct Colony {
  std::vector<Hill> hills;
  std::vector<double> elite;
  double elite_fitness = 0.0;
  int iteration = 0;  // completed steps
  AhcoaConfig config;
  Rng rng;
  ConvergenceTrace trace;
  std::size_t non_finite_rejections = 0;
};

// Packs perturbation magnitudes into layers: magnitudes are rescaled so the
// largest fits the budget, then placed next-fit in dimension order. Returns
// dimension indices per layer. Throws std::invalid_argument on negative or
// non-finite magnitudes or a non-positive budget.
std::vector<std::vector<int>> construct_layers(
    const std::vector<double>& magnitudes, double budget);

// Population init: positions drawn uniformly inside the box (hill-major,
// dimension-major draw order), then evaluated; the elite is the best hill.
Colony init_colony(const AhcoaConfig& config, const Objective& objective);

// One iteration. A pre-pass draws, per hill and dimension, a magnitude
// |N(0, sigma_d)| followed by a sign, with sigma_d shrinking by `contraction`
// every `epoch_length` iterations. Each hill then packs its magnitudes into
// layers and moves every dimension by sign * magnitude / 3^layer, clamped to
// the box; the move is kept only when it strictly improves the hill, and the
// elite tracks the best evaluation ever. Non-finite costs reject the move.
void step(Colony& colony, const Objective& objective);

RunResult run_ahcoa(const AhcoaConfig& config, const Objective& objective);

}  // namespace anthill
