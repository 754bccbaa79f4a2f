#include "anthill/config_file.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "anthill/format.hpp"

namespace anthill {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void parse_fail(int line, const std::string& what) {
  throw std::invalid_argument("line " + std::to_string(line) + ": " + what);
}

}  // namespace

ConfigFile ConfigFile::parse(std::istream& in) {
  ConfigFile cfg;
  std::string section;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string text = trim(raw);
    if (text.empty() || text[0] == '#' || text[0] == ';') continue;
    if (text.front() == '[') {
      if (text.back() != ']' || text.size() < 3)
        parse_fail(line, "malformed section header");
      section = trim(text.substr(1, text.size() - 2));
      if (section.empty()) parse_fail(line, "empty section name");
      cfg.data_[section];  // a section may legitimately stay empty
      continue;
    }
    const auto eq = text.find('=');
    if (eq == std::string::npos) parse_fail(line, "expected key=value");
    const std::string key = trim(text.substr(0, eq));
    const std::string value = trim(text.substr(eq + 1));
    if (key.empty()) parse_fail(line, "empty key");
    auto& sec = cfg.data_[section];
    if (sec.count(key))
      parse_fail(line, "duplicate key '" + key + "' in section '" + section +
                           "'");
    sec[key] = value;
  }
  return cfg;
}

ConfigFile ConfigFile::parse_string(const std::string& text) {
  std::istringstream in(text);
  return parse(in);
}

ConfigFile ConfigFile::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  return parse(in);
}

bool ConfigFile::has(const std::string& section,
                     const std::string& key) const {
  const auto sec = data_.find(section);
  return sec != data_.end() && sec->second.count(key) > 0;
}

std::string ConfigFile::get_string(const std::string& section,
                                   const std::string& key) const {
  const auto sec = data_.find(section);
  if (sec != data_.end()) {
    const auto it = sec->second.find(key);
    if (it != sec->second.end()) return it->second;
  }
  throw std::invalid_argument("missing config key [" + section + "] " + key);
}

std::string ConfigFile::get_string(const std::string& section,
                                   const std::string& key,
                                   const std::string& fallback) const {
  return has(section, key) ? get_string(section, key) : fallback;
}

double ConfigFile::get_double(const std::string& section,
                              const std::string& key) const {
  try {
    return parse_double(get_string(section, key));
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument("config key [" + section + "] " + key + ": " +
                                e.what());
  }
}

double ConfigFile::get_double(const std::string& section,
                              const std::string& key, double fallback) const {
  return has(section, key) ? get_double(section, key) : fallback;
}

long long ConfigFile::get_int(const std::string& section,
                              const std::string& key) const {
  try {
    return parse_int(get_string(section, key));
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument("config key [" + section + "] " + key + ": " +
                                e.what());
  }
}

long long ConfigFile::get_int(const std::string& section,
                              const std::string& key,
                              long long fallback) const {
  return has(section, key) ? get_int(section, key) : fallback;
}

std::vector<std::string> ConfigFile::sections() const {
  std::vector<std::string> out;
  out.reserve(data_.size());
  for (const auto& [name, _] : data_) out.push_back(name);
  return out;
}

std::vector<std::string> ConfigFile::keys(const std::string& section) const {
  std::vector<std::string> out;
  const auto sec = data_.find(section);
  if (sec == data_.end()) return out;
  out.reserve(sec->second.size());
  for (const auto& [key, _] : sec->second) out.push_back(key);
  return out;
}

SynthesisSpec synthesis_spec_from_config(const ConfigFile& config) {
  const std::string sec = "synthesis";
  const std::string mode = config.get_string(sec, "mode", "amplitude");
  const int elements =
      static_cast<int>(config.get_int(sec, "elements", 10));
  const double target = config.get_double(sec, "target_sll_db", -40.0);

  SynthesisSpec spec;
  if (mode == "amplitude") {
    spec = SynthesisSpec::amplitude_defaults(
        elements, config.get_double(sec, "spacing", 0.5), target);
    const auto vars = static_cast<std::size_t>(config.get_int(
        sec, "variables", static_cast<long long>(spec.bounds.size())));
    spec.bounds.assign(vars, VarBounds{config.get_double(sec, "bound_lo", 0.0),
                                       config.get_double(sec, "bound_hi", 1.0)});
  } else if (mode == "position") {
    const double aperture = config.get_double(sec, "aperture", 2.25);
    spec = SynthesisSpec::position_defaults(elements, aperture, target);
    spec.bounds.assign(spec.bounds.size(),
                       VarBounds{config.get_double(sec, "bound_lo", 0.0),
                                 config.get_double(sec, "bound_hi", aperture)});
  } else {
    throw std::invalid_argument("unknown synthesis mode '" + mode + "'");
  }

  if (config.has(sec, "fnbw_cap_deg"))
    spec.fnbw_cap_deg = config.get_double(sec, "fnbw_cap_deg");
  spec.grid.start_deg = config.get_double(sec, "grid_start_deg", 0.0);
  spec.grid.end_deg = config.get_double(sec, "grid_end_deg", 180.0);
  spec.grid.step_deg = config.get_double(sec, "grid_step_deg", 0.25);
  spec.floor_db = config.get_double(sec, "floor_db", kDefaultFloorDb);
  spec.lobe_excess_weight =
      config.get_double(sec, "lobe_excess_weight", spec.lobe_excess_weight);
  spec.fnbw_excess_weight =
      config.get_double(sec, "fnbw_excess_weight", spec.fnbw_excess_weight);
  spec.validate();
  return spec;
}

namespace {

template <typename T>
void fill_common(const ConfigFile& config, T& out) {
  out.population = static_cast<int>(
      config.get_int("optimizer", "population", out.population));
  out.max_iterations = static_cast<int>(
      config.get_int("optimizer", "iterations", out.max_iterations));
  out.seed = static_cast<std::uint64_t>(
      config.get_int("optimizer", "seed", static_cast<long long>(out.seed)));
}

}  // namespace

AhcoaConfig ahcoa_config_from_config(const ConfigFile& config) {
  AhcoaConfig out;
  fill_common(config, out);
  out.budget = config.get_double("optimizer", "budget", out.budget);
  out.epoch_length = static_cast<int>(
      config.get_int("optimizer", "epoch_length", out.epoch_length));
  out.contraction =
      config.get_double("optimizer", "contraction", out.contraction);
  out.sigma_fraction =
      config.get_double("optimizer", "sigma_fraction", out.sigma_fraction);
  out.validate();
  return out;
}

AloConfig alo_config_from_config(const ConfigFile& config) {
  AloConfig out;
  fill_common(config, out);
  out.validate();
  return out;
}

PsoConfig pso_config_from_config(const ConfigFile& config) {
  PsoConfig out;
  fill_common(config, out);
  out.inertia = config.get_double("optimizer", "inertia", out.inertia);
  out.cognitive = config.get_double("optimizer", "cognitive", out.cognitive);
  out.social = config.get_double("optimizer", "social", out.social);
  out.velocity_clamp =
      config.get_double("optimizer", "velocity_clamp", out.velocity_clamp);
  out.validate();
  return out;
}

}  // namespace anthill
