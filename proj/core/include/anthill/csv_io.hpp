#pragma once

#include <istream>
#include <ostream>
#include <string>

#include "anthill/array_model.hpp"

namespace anthill {

inline constexpr const char* kPatternCsvHeader = "theta_deg,af_mag,af_db";

// One row per sample, full-precision (round-trippable) decimals:
//   theta_deg,af_mag,af_db
void write_pattern_csv(std::ostream& os, const RadiationPattern& pattern);
std::string pattern_csv(const RadiationPattern& pattern);

// Strict inverse of write_pattern_csv: exact header, three numeric fields
// per row, strictly increasing angles. Errors carry the 1-based line number
// as std::invalid_argument. The pattern's floor is restored as the smallest
// dB value seen.
RadiationPattern read_pattern_csv(std::istream& is);

}  // namespace anthill
