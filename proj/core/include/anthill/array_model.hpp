#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace anthill {

inline constexpr double kDefaultFloorDb = -60.0;
inline constexpr double kDefaultGridStepDeg = 0.05;

// Zenith-angle sampling grid in degrees, inclusive of both endpoints. Points
// are start, start+step, ... ; the final point is pinned to end exactly, so a
// span that is not an integer multiple of step gets one short last interval.
struct AngleGrid {
  double start_deg = 0.0;
  double end_deg = 180.0;
  double step_deg = kDefaultGridStepDeg;

  std::size_t size() const;
  double angle_deg(std::size_t i) const;
  std::vector<double> angles() const;

  // Throws std::invalid_argument unless 0 <= start < end <= 180 and step > 0.
  void validate() const;
};

// Element positions of a linear array along the x axis, in wavelengths.
// Positions are stored expanded and strictly ascending; symmetric factories
// remember their structure so synthesis code can report half geometries.
class ArrayGeometry {
 public:
  // Arbitrary strictly increasing positions. Throws std::invalid_argument on
  // empty, non-finite, or non-increasing input.
  static ArrayGeometry from_positions(std::vector<double> positions);

  // Mirror-symmetric array from strictly increasing positive half positions,
  // optionally with one extra element at x = 0.
  static ArrayGeometry symmetric(std::vector<double> half_positions,
                                 bool center_element = false);

  // element_count elements spaced `spacing` wavelengths apart, centered on
  // the origin.
  static ArrayGeometry uniform(std::size_t element_count, double spacing);

  std::size_t element_count() const { return positions_.size(); }
  const std::vector<double>& positions() const { return positions_; }
  bool mirror_symmetric() const { return symmetric_; }
  bool has_center_element() const { return center_; }

  // Span between outermost elements.
  double aperture() const;

 private:
  ArrayGeometry() = default;
  std::vector<double> positions_;
  bool symmetric_ = false;
  bool center_ = false;
};

// Per-element drive: non-negative amplitudes and phases in radians, indexed
// the same way as ArrayGeometry::positions().
struct Excitation {
  std::vector<double> amplitudes;
  std::vector<double> phases;

  static Excitation uniform(std::size_t element_count);

  // Throws std::invalid_argument unless sizes match element_count, all values
  // are finite, amplitudes are non-negative, and at least one is positive.
  void validate(std::size_t element_count) const;
};

// Sampled far-field magnitude over zenith angle. `db` is normalized so the
// peak sits at exactly 0 dB and is clamped below at floor_db.
struct RadiationPattern {
  std::vector<double> angles_deg;
  std::vector<double> magnitude;
  std::vector<double> db;
  double floor_db = kDefaultFloorDb;
};

// Complex array factor sum(a_n * exp(i(2*pi*x_n*cos(theta) + phi_n))) with
// positions in wavelengths. theta outside [0, 180] throws std::domain_error.
std::complex<double> array_factor(const ArrayGeometry& geometry,
                                  const Excitation& excitation,
                                  double theta_deg);

// Evaluates |AF| over the grid and normalizes to dB. Throws std::domain_error
// if the pattern is identically zero (nothing to normalize against).
RadiationPattern pattern(const ArrayGeometry& geometry,
                         const Excitation& excitation, const AngleGrid& grid,
                         double floor_db = kDefaultFloorDb);

// Far-field boundary distance 2*D^2/lambda for an aperture of extent D. Both
// arguments in the same length unit; wavelength must be positive.
double fraunhofer_distance(double aperture_d, double wavelength);

// Every zenith angle in [0, 180] where a uniformly excited, uniformly spaced
// array of element_count elements has an exact pattern null, i.e. where
// cos(theta) = k/(element_count*spacing) for integer k != 0 not a multiple of
// element_count. Sorted ascending; includes endpoint nulls at 0/180 when the
// spacing admits them. element_count must be >= 2, spacing > 0.
std::vector<double> uniform_null_angles(int element_count, double spacing);

}  // namespace anthill
