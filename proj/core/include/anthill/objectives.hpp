#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "anthill/array_model.hpp"

namespace anthill {

struct VarBounds {
  double lo = 0.0;
  double hi = 1.0;
};

// A box-bounded minimization problem. `evaluate` must be pure: the same
// vector always yields the same cost, and never throws for in-box input
// (infeasible decodings return kInfeasibleCost instead).
struct Objective {
  std::size_t dimension = 0;
  std::vector<VarBounds> bounds;
  std::function<double(std::span<const double>)> evaluate;

  void validate() const;
};

inline constexpr double kInfeasibleCost = 1e9;
inline constexpr double kMinElementSeparation = 0.25;  // wavelengths

// Sum of squared coordinate offsets from a center point (origin by default).
double bowl(std::span<const double> v);
double bowl(std::span<const double> v, std::span<const double> center);

// Two-variable bowl with its minimum away from the origin, at (-27, 50).
double tangential_bowl(double x, double y);

Objective bowl_objective(std::size_t dimension,
                         VarBounds box = {-5.12, 5.12},
                         std::vector<double> center = {});
Objective tangential_bowl_objective(VarBounds box = {-500.0, 500.0});

enum class SynthesisMode { amplitude, position };

// Everything needed to turn a decision vector into an array design and score
// its pattern. In amplitude mode the geometry is a fixed uniform array and
// the vector holds element amplitudes, either all of them or the symmetric
// half ordered center-outward. In position mode the excitation is uniform
// and the vector holds the positive half positions of a mirror-symmetric
// array (odd element counts add a fixed element at the origin).
struct SynthesisSpec {
  SynthesisMode mode = SynthesisMode::amplitude;
  int element_count = 10;
  double spacing = 0.5;    // amplitude mode: uniform spacing in wavelengths
  double aperture = 2.25;  // position mode: maximum half-aperture
  double target_sll_db = -40.0;
  std::optional<double> fnbw_cap_deg;
  AngleGrid grid{0.0, 180.0, 0.25};
  double floor_db = kDefaultFloorDb;
  std::vector<VarBounds> bounds;  // one per decision variable
  double lobe_excess_weight = 0.1;
  double fnbw_excess_weight = 1.0;

  std::size_t variable_count() const { return bounds.size(); }
  void validate() const;

  static SynthesisSpec amplitude_defaults(int element_count, double spacing,
                                          double target_sll_db);
  static SynthesisSpec position_defaults(int element_count, double aperture,
                                         double target_sll_db);
};

// Expands a decision vector to per-element amplitudes (see SynthesisSpec).
std::vector<double> decode_amplitudes(const SynthesisSpec& spec,
                                      std::span<const double> v);

struct DecodedPositions {
  std::vector<double> half_positions;
  bool feasible = true;  // false when the separation repair broke ordering
};

// Sorts the raw half positions, pushes neighbors apart to the minimum
// element separation, and clamps to the aperture. Infeasible when clamping
// collapses the ordering.
DecodedPositions decode_positions(const SynthesisSpec& spec,
                                  std::span<const double> v);

// Pattern-quality cost: max(peak_sll - target, 0)
//   + lobe_excess_weight * sum over non-main lobes of max(peak - target, 0)
//   + fnbw_excess_weight * max(fnbw - cap, 0)   (only when a cap is set).
// Infeasible decodings cost kInfeasibleCost; the objective never throws.
Objective sll_cost(const SynthesisSpec& spec);

}  // namespace anthill
