#include "artifact.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "anthill/version.hpp"

namespace anthill::tool {

using nlohmann::json;

Objective objective_from_problem(const ProblemSpec& problem) {
  if (problem.kind == "bowl")
    return bowl_objective(problem.dimension,
                          VarBounds{problem.box_lo, problem.box_hi});
  if (problem.kind == "tangential_bowl")
    return tangential_bowl_objective(VarBounds{problem.box_lo, problem.box_hi});
  if (problem.kind == "sll") {
    if (!problem.synthesis)
      throw std::invalid_argument("sll problem is missing its synthesis spec");
    return sll_cost(*problem.synthesis);
  }
  throw std::invalid_argument("unknown problem kind '" + problem.kind + "'");
}

namespace {

json synthesis_to_json(const SynthesisSpec& spec) {
  json j;
  j["mode"] = spec.mode == SynthesisMode::amplitude ? "amplitude" : "position";
  j["element_count"] = spec.element_count;
  j["spacing"] = spec.spacing;
  j["aperture"] = spec.aperture;
  j["target_sll_db"] = spec.target_sll_db;
  if (spec.fnbw_cap_deg) j["fnbw_cap_deg"] = *spec.fnbw_cap_deg;
  j["grid"] = {{"start_deg", spec.grid.start_deg},
               {"end_deg", spec.grid.end_deg},
               {"step_deg", spec.grid.step_deg}};
  j["floor_db"] = spec.floor_db;
  json bounds = json::array();
  for (const auto& b : spec.bounds) bounds.push_back({{"lo", b.lo}, {"hi", b.hi}});
  j["bounds"] = bounds;
  j["lobe_excess_weight"] = spec.lobe_excess_weight;
  j["fnbw_excess_weight"] = spec.fnbw_excess_weight;
  return j;
}

SynthesisSpec synthesis_from_json(const json& j) {
  SynthesisSpec spec;
  const std::string mode = j.at("mode").get<std::string>();
  if (mode == "amplitude")
    spec.mode = SynthesisMode::amplitude;
  else if (mode == "position")
    spec.mode = SynthesisMode::position;
  else
    throw std::invalid_argument("unknown synthesis mode '" + mode + "'");
  spec.element_count = j.at("element_count").get<int>();
  spec.spacing = j.at("spacing").get<double>();
  spec.aperture = j.at("aperture").get<double>();
  spec.target_sll_db = j.at("target_sll_db").get<double>();
  if (j.contains("fnbw_cap_deg"))
    spec.fnbw_cap_deg = j.at("fnbw_cap_deg").get<double>();
  const auto& grid = j.at("grid");
  spec.grid = AngleGrid{grid.at("start_deg").get<double>(),
                        grid.at("end_deg").get<double>(),
                        grid.at("step_deg").get<double>()};
  spec.floor_db = j.at("floor_db").get<double>();
  spec.bounds.clear();
  for (const auto& b : j.at("bounds"))
    spec.bounds.push_back(
        VarBounds{b.at("lo").get<double>(), b.at("hi").get<double>()});
  spec.lobe_excess_weight = j.at("lobe_excess_weight").get<double>();
  spec.fnbw_excess_weight = j.at("fnbw_excess_weight").get<double>();
  spec.validate();
  return spec;
}

}  // namespace

std::string to_json(const RunArtifact& artifact) {
  json j;
  j["tool"] = artifact.tool;
  j["version"] = artifact.version.empty() ? kVersion : artifact.version;
  j["algo"] = artifact.algo;
  j["seed"] = artifact.seed;
  j["config"] = artifact.config_echo;

  json problem;
  problem["kind"] = artifact.problem.kind;
  problem["dimension"] = artifact.problem.dimension;
  problem["box_lo"] = artifact.problem.box_lo;
  problem["box_hi"] = artifact.problem.box_hi;
  if (artifact.problem.synthesis)
    problem["synthesis"] = synthesis_to_json(*artifact.problem.synthesis);
  j["problem"] = problem;

  j["best_vector"] = artifact.best_vector;
  j["best_fitness"] = artifact.best_fitness;
  j["recheck_fitness"] = artifact.recheck_fitness;
  j["iterations"] = artifact.iterations;
  j["duration_seconds"] = artifact.duration_seconds;

  json trace = json::array();
  for (const auto& e : artifact.trace)
    trace.push_back(
        {{"iteration", e.iteration}, {"elite_fitness", e.elite_fitness}});
  j["trace"] = trace;

  if (!artifact.decoded_amplitudes.empty())
    j["decoded_amplitudes"] = artifact.decoded_amplitudes;
  if (!artifact.decoded_positions.empty())
    j["decoded_positions"] = artifact.decoded_positions;
  return j.dump(2) + "\n";
}

RunArtifact from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("artifact is not valid JSON: ") +
                                e.what());
  }
  try {
    RunArtifact a;
    a.tool = j.at("tool").get<std::string>();
    a.version = j.at("version").get<std::string>();
    a.algo = j.at("algo").get<std::string>();
    a.seed = j.at("seed").get<std::uint64_t>();
    a.config_echo = j.at("config").get<std::string>();
    const auto& problem = j.at("problem");
    a.problem.kind = problem.at("kind").get<std::string>();
    a.problem.dimension = problem.at("dimension").get<std::size_t>();
    a.problem.box_lo = problem.at("box_lo").get<double>();
    a.problem.box_hi = problem.at("box_hi").get<double>();
    if (problem.contains("synthesis"))
      a.problem.synthesis = synthesis_from_json(problem.at("synthesis"));
    a.best_vector = j.at("best_vector").get<std::vector<double>>();
    a.best_fitness = j.at("best_fitness").get<double>();
    a.recheck_fitness = j.at("recheck_fitness").get<double>();
    a.iterations = j.at("iterations").get<int>();
    a.duration_seconds = j.at("duration_seconds").get<double>();
    for (const auto& e : j.at("trace"))
      a.trace.push_back({e.at("iteration").get<int>(),
                         e.at("elite_fitness").get<double>()});
    if (j.contains("decoded_amplitudes"))
      a.decoded_amplitudes = j.at("decoded_amplitudes").get<std::vector<double>>();
    if (j.contains("decoded_positions"))
      a.decoded_positions = j.at("decoded_positions").get<std::vector<double>>();
    return a;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("artifact schema violation: ") +
                                e.what());
  }
}

void save(const RunArtifact& artifact, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write artifact: " + path);
  out << to_json(artifact);
  if (!out) throw std::runtime_error("failed while writing artifact: " + path);
}

RunArtifact load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read artifact: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_json(buf.str());
}

bool self_check(const RunArtifact& artifact) {
  const Objective objective = objective_from_problem(artifact.problem);
  if (artifact.best_vector.size() != objective.dimension) return false;
  const double cost = objective.evaluate(artifact.best_vector);
  return cost == artifact.best_fitness;
}

}  // namespace anthill::tool
