#pragma once

#include <istream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "anthill/ahcoa.hpp"
#include "anthill/alo.hpp"
#include "anthill/objectives.hpp"
#include "anthill/pso.hpp"

namespace anthill {

// INI-style key=value file with [section] headers. Lines starting with '#'
// or ';' are comments; keys may not repeat within a section. Parse errors
// carry the 1-based line number. Keys before any header land in section "".
class ConfigFile {
 public:
  static ConfigFile parse(std::istream& in);
  static ConfigFile parse_string(const std::string& text);

  // Throws std::runtime_error when the file cannot be read.
  static ConfigFile load(const std::string& path);

  bool has(const std::string& section, const std::string& key) const;

  // Missing keys throw std::invalid_argument naming section and key; the
  // defaulted overloads return the fallback instead.
  std::string get_string(const std::string& section,
                         const std::string& key) const;
  std::string get_string(const std::string& section, const std::string& key,
                         const std::string& fallback) const;
  double get_double(const std::string& section, const std::string& key) const;
  double get_double(const std::string& section, const std::string& key,
                    double fallback) const;
  long long get_int(const std::string& section, const std::string& key) const;
  long long get_int(const std::string& section, const std::string& key,
                    long long fallback) const;

  std::vector<std::string> sections() const;
  std::vector<std::string> keys(const std::string& section) const;

 private:
  std::map<std::string, std::map<std::string, std::string>> data_;
};

// Builds a synthesis problem from the [synthesis] section (mode, elements,
// spacing/aperture, target_sll_db, optional fnbw_cap_deg, grid_*_deg,
// floor_db, bound_lo/bound_hi, optional `variables` override for full
// per-element amplitude vectors, and the two cost weights). Unknown modes or
// values that fail SynthesisSpec::validate throw std::invalid_argument.
SynthesisSpec synthesis_spec_from_config(const ConfigFile& config);

// Optimizer settings from the [optimizer] section; every field optional,
// falling back to the struct defaults. The shared keys are population,
// iterations, seed; AHCOA adds budget, epoch_length, contraction,
// sigma_fraction; PSO adds inertia, cognitive, social, velocity_clamp.
AhcoaConfig ahcoa_config_from_config(const ConfigFile& config);
AloConfig alo_config_from_config(const ConfigFile& config);
PsoConfig pso_config_from_config(const ConfigFile& config);

}  // namespace anthill
