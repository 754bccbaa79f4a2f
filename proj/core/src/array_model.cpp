#include "anthill/array_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace anthill {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDegToRad = kPi / 180.0;

bool all_finite(const std::vector<double>& v) {
  return std::all_of(v.begin(), v.end(),
                     [](double x) { return std::isfinite(x); });
}

bool strictly_increasing(const std::vector<double>& v) {
  return std::adjacent_find(v.begin(), v.end(), [](double a, double b) {
           return a >= b;
         }) == v.end();
}

}  // namespace

void AngleGrid::validate() const {
  if (!std::isfinite(start_deg) || !std::isfinite(end_deg) ||
      !std::isfinite(step_deg))
    throw std::invalid_argument("angle grid values must be finite");
  if (step_deg <= 0.0)
    throw std::invalid_argument("angle grid step must be positive");
  if (start_deg < 0.0 || end_deg > 180.0 || start_deg >= end_deg)
    throw std::invalid_argument(
        "angle grid requires 0 <= start < end <= 180 degrees");
}

std::size_t AngleGrid::size() const {
  validate();
  const double span = end_deg - start_deg;
  // Last regular index k with start + k*step < end, up to rounding slack.
  auto k = static_cast<std::size_t>(std::floor(span / step_deg + 1e-9));
  const double last_regular = start_deg + static_cast<double>(k) * step_deg;
  if (std::abs(end_deg - last_regular) <= 1e-9 * std::max(1.0, step_deg))
    return k + 1;  // step divides the span; final regular point is `end`
  return k + 2;    // one extra pinned endpoint
}

double AngleGrid::angle_deg(std::size_t i) const {
  const std::size_t n = size();
  if (i >= n) throw std::invalid_argument("angle grid index out of range");
  if (i + 1 == n) return end_deg;
  return start_deg + static_cast<double>(i) * step_deg;
}

std::vector<double> AngleGrid::angles() const {
  const std::size_t n = size();
  std::vector<double> out(n);
  for (std::size_t i = 0; i + 1 < n; ++i)
    out[i] = start_deg + static_cast<double>(i) * step_deg;
  out[n - 1] = end_deg;
  return out;
}

ArrayGeometry ArrayGeometry::from_positions(std::vector<double> positions) {
  if (positions.empty())
    throw std::invalid_argument("array needs at least one element");
  if (!all_finite(positions))
    throw std::invalid_argument("element positions must be finite");
  if (!strictly_increasing(positions))
    throw std::invalid_argument("element positions must be strictly increasing");
  ArrayGeometry g;
  g.positions_ = std::move(positions);
  return g;
}

ArrayGeometry ArrayGeometry::symmetric(std::vector<double> half_positions,
                                       bool center_element) {
  if (half_positions.empty() && !center_element)
    throw std::invalid_argument("array needs at least one element");
  if (!all_finite(half_positions))
    throw std::invalid_argument("element positions must be finite");
  for (double p : half_positions)
    if (p <= 0.0)
      throw std::invalid_argument("half positions must be strictly positive");
  if (!strictly_increasing(half_positions))
    throw std::invalid_argument("half positions must be strictly increasing");

  ArrayGeometry g;
  g.positions_.reserve(2 * half_positions.size() + (center_element ? 1 : 0));
  for (auto it = half_positions.rbegin(); it != half_positions.rend(); ++it)
    g.positions_.push_back(-*it);
  if (center_element) g.positions_.push_back(0.0);
  for (double p : half_positions) g.positions_.push_back(p);
  g.symmetric_ = true;
  g.center_ = center_element;
  return g;
}

ArrayGeometry ArrayGeometry::uniform(std::size_t element_count,
                                     double spacing) {
  if (element_count == 0)
    throw std::invalid_argument("array needs at least one element");
  if (!std::isfinite(spacing) || spacing <= 0.0)
    throw std::invalid_argument("element spacing must be positive");
  ArrayGeometry g;
  g.positions_.reserve(element_count);
  const double offset = 0.5 * static_cast<double>(element_count - 1);
  for (std::size_t m = 0; m < element_count; ++m)
    g.positions_.push_back((static_cast<double>(m) - offset) * spacing);
  g.symmetric_ = true;
  g.center_ = (element_count % 2) == 1;
  return g;
}

double ArrayGeometry::aperture() const {
  return positions_.back() - positions_.front();
}

Excitation Excitation::uniform(std::size_t element_count) {
  return Excitation{std::vector<double>(element_count, 1.0),
                    std::vector<double>(element_count, 0.0)};
}

void Excitation::validate(std::size_t element_count) const {
  if (amplitudes.size() != element_count || phases.size() != element_count)
    throw std::invalid_argument("excitation size does not match element count");
  if (!all_finite(amplitudes) || !all_finite(phases))
    throw std::invalid_argument("excitation values must be finite");
  bool any_positive = false;
  for (double a : amplitudes) {
    if (a < 0.0)
      throw std::invalid_argument("amplitudes must be non-negative");
    if (a > 0.0) any_positive = true;
  }
  if (!any_positive)
    throw std::invalid_argument("at least one amplitude must be positive");
}

std::complex<double> array_factor(const ArrayGeometry& geometry,
                                  const Excitation& excitation,
                                  double theta_deg) {
  if (!std::isfinite(theta_deg) || theta_deg < 0.0 || theta_deg > 180.0)
    throw std::domain_error("zenith angle outside [0, 180] degrees");
  excitation.validate(geometry.element_count());

  const double u = std::cos(theta_deg * kDegToRad);
  std::complex<double> acc{0.0, 0.0};
  const auto& xs = geometry.positions();
  for (std::size_t n = 0; n < xs.size(); ++n) {
    const double psi = 2.0 * kPi * xs[n] * u + excitation.phases[n];
    acc += excitation.amplitudes[n] *
           std::complex<double>(std::cos(psi), std::sin(psi));
  }
  return acc;
}

RadiationPattern pattern(const ArrayGeometry& geometry,
                         const Excitation& excitation, const AngleGrid& grid,
                         double floor_db) {
  grid.validate();
  excitation.validate(geometry.element_count());
  if (!std::isfinite(floor_db) || floor_db >= 0.0)
    throw std::invalid_argument("dB floor must be finite and negative");

  RadiationPattern p;
  p.floor_db = floor_db;
  p.angles_deg = grid.angles();
  p.magnitude.resize(p.angles_deg.size());
  p.db.resize(p.angles_deg.size());

  const auto& xs = geometry.positions();
  double peak = 0.0;
  std::size_t peak_index = 0;
  for (std::size_t i = 0; i < p.angles_deg.size(); ++i) {
    const double u = std::cos(p.angles_deg[i] * kDegToRad);
    double re = 0.0, im = 0.0;
    for (std::size_t n = 0; n < xs.size(); ++n) {
      const double psi = 2.0 * kPi * xs[n] * u + excitation.phases[n];
      re += excitation.amplitudes[n] * std::cos(psi);
      im += excitation.amplitudes[n] * std::sin(psi);
    }
    const double mag = std::hypot(re, im);
    p.magnitude[i] = mag;
    if (mag > peak) {
      peak = mag;
      peak_index = i;
    }
  }
  if (peak <= 0.0)
    throw std::domain_error("pattern is identically zero; cannot normalize");

  for (std::size_t i = 0; i < p.db.size(); ++i) {
    const double mag = p.magnitude[i];
    double db = mag > 0.0 ? 20.0 * std::log10(mag / peak) : floor_db;
    p.db[i] = std::max(db, floor_db);
  }
  p.db[peak_index] = 0.0;  // exact, immune to log/divide rounding
  return p;
}

double fraunhofer_distance(double aperture_d, double wavelength) {
  if (!std::isfinite(aperture_d) || aperture_d < 0.0)
    throw std::domain_error("aperture must be non-negative");
  if (!std::isfinite(wavelength) || wavelength <= 0.0)
    throw std::domain_error("wavelength must be positive");
  return 2.0 * aperture_d * aperture_d / wavelength;
}

std::vector<double> uniform_null_angles(int element_count, double spacing) {
  if (element_count < 2)
    throw std::invalid_argument("uniform nulls need at least two elements");
  if (!std::isfinite(spacing) || spacing <= 0.0)
    throw std::invalid_argument("element spacing must be positive");

  const double ms = static_cast<double>(element_count) * spacing;
  std::vector<double> out;
  for (int k = 1;; ++k) {
    double c = static_cast<double>(k) / ms;
    if (c > 1.0 + 1e-12) break;
    if (k % element_count == 0) continue;
    c = std::min(c, 1.0);
    const double theta = std::acos(c) / kDegToRad;
    out.push_back(theta);          // cos(theta) = +k/(M s)
    out.push_back(180.0 - theta);  // cos(theta) = -k/(M s)
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace anthill
