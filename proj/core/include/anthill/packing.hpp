#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace anthill {

// Feasibility checks allow an absolute slack of this much on bin loads so
// that exact fills like 0.34 + 0.33 + 0.33 = 1.0 survive float rounding.
inline constexpr double kCapacityTolerance = 1e-9;

struct PackingInstance {
  std::vector<double> sizes;
  double capacity = 1.0;

  // Strict instance invariant: capacity > 0, every size positive, finite,
  // and no larger than capacity. Throws std::invalid_argument.
  void validate() const;
};

// Bin contents as item-index lists. The list-of-lists form can express the
// malformed states validate() reports on (items missing, items in several
// bins), which a flat item->bin map cannot.
struct PackingSolution {
  std::vector<std::vector<int>> bins;
  int used_bins = 0;
  std::vector<double> bin_loads;

  // Flat item->bin view; -1 for unassigned, first containing bin wins.
  std::vector<int> assignment(std::size_t item_count) const;
};

// Single pass in item order: place into the current bin if it fits, else
// open a new one. Accepts zero-size items (they ride along in the current
// bin); an item larger than the capacity throws std::invalid_argument.
PackingSolution next_fit(const PackingInstance& instance);

// Exhaustive branch-and-bound over canonical bin assignments; returns the
// lexicographically smallest assignment among those using the fewest bins.
// Limited to 12 items (throws std::invalid_argument beyond that).
PackingSolution optimal_packing(const PackingInstance& instance);

struct ValidationResult {
  bool ok = true;
  std::vector<std::string> violations;
};

// Checks a solution against an instance: every item in exactly one bin, bins
// contiguous and non-empty, loads consistent and within capacity, used_bins
// equal to the bin count. Collects human-readable violations; never throws.
ValidationResult validate(const PackingInstance& instance,
                          const PackingSolution& solution);

}  // namespace anthill
