#include "anthill/objectives.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "anthill/pattern_metrics.hpp"

namespace anthill {

void Objective::validate() const {
  if (dimension == 0)
    throw std::invalid_argument("objective needs at least one variable");
  if (bounds.size() != dimension)
    throw std::invalid_argument("objective bounds do not match dimension");
  for (const auto& b : bounds)
    if (!std::isfinite(b.lo) || !std::isfinite(b.hi) || b.lo >= b.hi)
      throw std::invalid_argument("objective bounds must satisfy lo < hi");
  if (!evaluate)
    throw std::invalid_argument("objective is missing an evaluate function");
}

double bowl(std::span<const double> v) {
  double acc = 0.0;
  for (double x : v) acc += x * x;
  return acc;
}

double bowl(std::span<const double> v, std::span<const double> center) {
  if (v.size() != center.size())
    throw std::invalid_argument("bowl center does not match vector size");
  double acc = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double d = v[i] - center[i];
    acc += d * d;
  }
  return acc;
}

double tangential_bowl(double x, double y) {
  const double dx = x + 27.0;
  const double dy = y - 50.0;
  return dx * dx + dy * dy;
}

Objective bowl_objective(std::size_t dimension, VarBounds box,
                         std::vector<double> center) {
  if (dimension == 0)
    throw std::invalid_argument("objective needs at least one variable");
  if (center.empty()) center.assign(dimension, 0.0);
  if (center.size() != dimension)
    throw std::invalid_argument("bowl center does not match dimension");
  Objective obj;
  obj.dimension = dimension;
  obj.bounds.assign(dimension, box);
  obj.evaluate = [c = std::move(center)](std::span<const double> v) {
    return bowl(v, c);
  };
  obj.validate();
  return obj;
}

Objective tangential_bowl_objective(VarBounds box) {
  Objective obj;
  obj.dimension = 2;
  obj.bounds.assign(2, box);
  obj.evaluate = [](std::span<const double> v) {
    return tangential_bowl(v[0], v[1]);
  };
  obj.validate();
  return obj;
}

namespace {

std::size_t half_variable_count(int element_count) {
  return static_cast<std::size_t>((element_count + 1) / 2);
}

}  // namespace

void SynthesisSpec::validate() const {
  if (element_count < 2)
    throw std::invalid_argument("synthesis needs at least two elements");
  grid.validate();
  if (!std::isfinite(floor_db) || floor_db >= 0.0)
    throw std::invalid_argument("dB floor must be finite and negative");
  if (!std::isfinite(target_sll_db))
    throw std::invalid_argument("target side-lobe level must be finite");
  if (fnbw_cap_deg && (!std::isfinite(*fnbw_cap_deg) || *fnbw_cap_deg <= 0.0))
    throw std::invalid_argument("fnbw cap must be positive");
  if (lobe_excess_weight < 0.0 || fnbw_excess_weight < 0.0)
    throw std::invalid_argument("cost weights must be non-negative");
  if (bounds.empty())
    throw std::invalid_argument("synthesis needs decision-variable bounds");
  for (const auto& b : bounds)
    if (!std::isfinite(b.lo) || !std::isfinite(b.hi) || b.lo >= b.hi)
      throw std::invalid_argument("synthesis bounds must satisfy lo < hi");

  const auto m = static_cast<std::size_t>(element_count);
  if (mode == SynthesisMode::amplitude) {
    if (!std::isfinite(spacing) || spacing <= 0.0)
      throw std::invalid_argument("element spacing must be positive");
    if (bounds.size() != m && bounds.size() != half_variable_count(element_count))
      throw std::invalid_argument(
          "amplitude synthesis needs one bound per element or per half");
    for (const auto& b : bounds)
      if (b.lo < 0.0)
        throw std::invalid_argument("amplitude bounds must be non-negative");
  } else {
    if (!std::isfinite(aperture) || aperture <= 0.0)
      throw std::invalid_argument("aperture must be positive");
    if (bounds.size() != m / 2)
      throw std::invalid_argument(
          "position synthesis needs one bound per half element");
    for (const auto& b : bounds)
      if (b.lo < 0.0)
        throw std::invalid_argument("position bounds must be non-negative");
  }
}

SynthesisSpec SynthesisSpec::amplitude_defaults(int element_count,
                                                double spacing,
                                                double target_sll_db) {
  SynthesisSpec spec;
  spec.mode = SynthesisMode::amplitude;
  spec.element_count = element_count;
  spec.spacing = spacing;
  spec.target_sll_db = target_sll_db;
  spec.bounds.assign(half_variable_count(element_count), VarBounds{0.0, 1.0});
  spec.validate();
  return spec;
}

SynthesisSpec SynthesisSpec::position_defaults(int element_count,
                                               double aperture,
                                               double target_sll_db) {
  SynthesisSpec spec;
  spec.mode = SynthesisMode::position;
  spec.element_count = element_count;
  spec.aperture = aperture;
  spec.target_sll_db = target_sll_db;
  spec.bounds.assign(static_cast<std::size_t>(element_count) / 2,
                     VarBounds{0.0, aperture});
  spec.validate();
  return spec;
}

std::vector<double> decode_amplitudes(const SynthesisSpec& spec,
                                      std::span<const double> v) {
  const auto m = static_cast<std::size_t>(spec.element_count);
  if (v.size() == m) return {v.begin(), v.end()};
  if (v.size() != half_variable_count(spec.element_count))
    throw std::invalid_argument("amplitude vector has unexpected length");

  // v is ordered center-outward; expand to ascending element order.
  std::vector<double> full(m);
  const std::size_t h = v.size();
  if (m % 2 == 0) {
    for (std::size_t j = 0; j < h; ++j) {
      full[h - 1 - j] = v[j];
      full[h + j] = v[j];
    }
  } else {
    full[h - 1] = v[0];
    for (std::size_t j = 1; j < h; ++j) {
      full[h - 1 - j] = v[j];
      full[h - 1 + j] = v[j];
    }
  }
  return full;
}

DecodedPositions decode_positions(const SynthesisSpec& spec,
                                  std::span<const double> v) {
  const auto m = static_cast<std::size_t>(spec.element_count);
  if (v.size() != m / 2)
    throw std::invalid_argument("position vector has unexpected length");

  DecodedPositions out;
  out.half_positions.assign(v.begin(), v.end());
  std::sort(out.half_positions.begin(), out.half_positions.end());

  // Innermost element: half the mirrored gap for even counts, a full
  // separation from the fixed center element for odd counts.
  const bool center = (m % 2) == 1;
  double min_next =
      center ? kMinElementSeparation : 0.5 * kMinElementSeparation;
  for (double& p : out.half_positions) {
    p = std::max(p, min_next);
    p = std::min(p, spec.aperture);
    min_next = p + kMinElementSeparation;
  }
  for (std::size_t j = 0; j + 1 < out.half_positions.size(); ++j) {
    if (out.half_positions[j] >= out.half_positions[j + 1]) {
      out.feasible = false;
      break;
    }
  }
  return out;
}

Objective sll_cost(const SynthesisSpec& spec) {
  spec.validate();

  Objective obj;
  obj.dimension = spec.variable_count();
  obj.bounds = spec.bounds;
  obj.evaluate = [spec](std::span<const double> v) -> double {
    LobeReport report;
    try {
      if (spec.mode == SynthesisMode::amplitude) {
        auto amps = decode_amplitudes(spec, v);
        bool any_positive = false;
        for (double& a : amps) {
          a = std::max(a, 0.0);
          if (a > 0.0) any_positive = true;
        }
        if (!any_positive) return kInfeasibleCost;
        const auto geometry = ArrayGeometry::uniform(
            static_cast<std::size_t>(spec.element_count), spec.spacing);
        Excitation excitation;
        excitation.amplitudes = std::move(amps);
        excitation.phases.assign(geometry.element_count(), 0.0);
        report = analyze(
            pattern(geometry, excitation, spec.grid, spec.floor_db),
            spec.floor_db);
      } else {
        auto decoded = decode_positions(spec, v);
        if (!decoded.feasible) return kInfeasibleCost;
        const auto geometry = ArrayGeometry::symmetric(
            std::move(decoded.half_positions), (spec.element_count % 2) == 1);
        report = analyze(pattern(geometry,
                                 Excitation::uniform(geometry.element_count()),
                                 spec.grid, spec.floor_db),
                         spec.floor_db);
      }
    } catch (const std::exception&) {
      return kInfeasibleCost;
    }

    double cost = 0.0;
    if (report.peak_sll_db)
      cost += std::max(*report.peak_sll_db - spec.target_sll_db, 0.0);
    double excess = 0.0;
    for (const auto& lobe : report.lobes) {
      if (lobe.kind == LobeKind::main) continue;
      excess += std::max(lobe.peak_db - spec.target_sll_db, 0.0);
    }
    cost += spec.lobe_excess_weight * excess;
    if (spec.fnbw_cap_deg && report.fnbw_deg)
      cost += spec.fnbw_excess_weight *
              std::max(*report.fnbw_deg - *spec.fnbw_cap_deg, 0.0);
    return cost;
  };
  obj.validate();
  return obj;
}

}  // namespace anthill
