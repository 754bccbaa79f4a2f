#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "anthill/array_model.hpp"

namespace anthill {

enum class LobeKind { main, side, grating };

// One detected lobe. Peak angle and level are parabola-refined from the three
// samples around the peak (raw sample values at grid edges or on plateaus).
// Bounds are the splitting valleys (shared between neighbors) or run ends.
struct Lobe {
  LobeKind kind = LobeKind::side;
  double peak_angle_deg = 0.0;
  double peak_db = 0.0;
  double left_deg = 0.0;
  double right_deg = 0.0;
  std::size_t peak_index = 0;  // raw sample index of the lobe maximum
  std::size_t left_index = 0;
  std::size_t right_index = 0;
};

struct LobeReport {
  std::vector<Lobe> lobes;
  std::size_t main_index = 0;           // index into lobes
  int side_lobe_count = 0;              // all non-main lobes, grating included
  int grating_count = 0;                // non-main lobes peaking at >= -1 dB
  std::optional<double> peak_sll_db;    // highest non-main peak; absent if none
  std::optional<double> fnbw_deg;       // first-null beamwidth; absent if the
                                        // main lobe reaches a grid end without
                                        // an interior minimum on that side
};

// Splits the pattern into lobes: maximal runs of samples strictly above
// floor_db, subdivided at local minima that sit at least 3 dB below both
// neighboring lobe peaks (merging failed separations shallowest-first).
// Exactly one lobe is main: the one containing the global maximum, ties
// broken toward 90 degrees. Non-main lobes peaking at >= -1 dB are grating.
// Requires at least 3 samples and a finite negative floor_db; throws
// std::invalid_argument otherwise.
std::vector<Lobe> find_lobes(const RadiationPattern& pattern, double floor_db);
std::vector<Lobe> find_lobes(const RadiationPattern& pattern);

// Number of non-main lobes (side and grating together).
int count_side_lobes(const RadiationPattern& pattern, double floor_db);

// Highest non-main refined peak level in dB; absent when the pattern has no
// lobe besides the main one.
std::optional<double> peak_sll(const RadiationPattern& pattern,
                               double floor_db);

// Width between the first interior magnitude minima flanking the main peak,
// refined by a parabola through squared magnitude (exact for true nulls).
// Endpoint samples never bound the width; a side that runs to the grid edge
// without an interior minimum leaves the result absent.
std::optional<double> fnbw(const RadiationPattern& pattern);

// One pass over the pattern collecting everything above.
LobeReport analyze(const RadiationPattern& pattern, double floor_db);

// Flat key=value record, one field per line:
//   side_lobe_count, grating_count, peak_sll_db, fnbw_deg
// preceded by elements=/spacing= lines when those are supplied. Absent
// optional metrics render as an empty value.
std::string format_metrics_record(const LobeReport& report,
                                  std::optional<int> elements = {},
                                  std::optional<double> spacing = {});

}  // namespace anthill
