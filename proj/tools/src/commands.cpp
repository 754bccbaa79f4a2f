#include "commands.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "anthill/ahcoa.hpp"
#include "anthill/alo.hpp"
#include "anthill/array_model.hpp"
#include "anthill/config_file.hpp"
#include "anthill/csv_io.hpp"
#include "anthill/format.hpp"
#include "anthill/pattern_metrics.hpp"
#include "anthill/pso.hpp"
#include "anthill/version.hpp"
#include "artifact.hpp"
#include "bench_suites.hpp"

namespace anthill::tool {

namespace fs = std::filesystem;

std::string resolve_output_path(const std::string& path) {
  fs::path p(path);
  if (p.is_absolute()) return p.string();
  const char* base = std::getenv("ANTHILL_OUT_DIR");
  if (base == nullptr || *base == '\0') return p.string();
  std::error_code ec;
  fs::create_directories(base, ec);
  if (ec)
    throw IoError("cannot create output directory '" + std::string(base) +
                  "': " + ec.message());
  return (fs::path(base) / p).string();
}

namespace {

// Writes through a std::ostream chosen by `out`: a file when non-empty
// (resolved against the out dir), stdout otherwise.
template <typename Fn>
void with_output(const std::string& out, Fn&& fn) {
  if (out.empty()) {
    fn(std::cout);
    if (!std::cout) throw IoError("failed writing to stdout");
    return;
  }
  const std::string path = resolve_output_path(out);
  std::ofstream file(path);
  if (!file) throw IoError("cannot open output file: " + path);
  fn(file);
  if (!file) throw IoError("failed while writing: " + path);
}

RadiationPattern build_pattern(const PatternArgs& args) {
  ArrayGeometry geometry =
      args.positions.empty()
          ? ArrayGeometry::uniform(
                static_cast<std::size_t>(args.elements), args.spacing)
          : ArrayGeometry::from_positions(args.positions);
  Excitation excitation = Excitation::uniform(geometry.element_count());
  if (!args.amplitudes.empty()) {
    if (args.amplitudes.size() != geometry.element_count())
      throw UsageError("--amplitudes must list one value per element");
    excitation.amplitudes = args.amplitudes;
  }
  if (!args.phases.empty()) {
    if (args.phases.size() != geometry.element_count())
      throw UsageError("--phases must list one value per element");
    excitation.phases = args.phases;
  }
  const AngleGrid grid{args.grid_start, args.grid_end, args.grid_step};
  return pattern(geometry, excitation, grid, args.floor_db);
}

}  // namespace

int cmd_pattern(const PatternArgs& args) {
  if (args.elements < 1) throw UsageError("--elements must be at least 1");
  const RadiationPattern p = build_pattern(args);
  with_output(args.out, [&](std::ostream& os) { write_pattern_csv(os, p); });
  return 0;
}

int cmd_metrics(const MetricsArgs& args) {
  RadiationPattern p;
  std::optional<int> elements;
  std::optional<double> spacing;
  if (args.in.empty()) {
    PatternArgs pa;
    pa.elements = args.elements;
    pa.spacing = args.spacing;
    pa.grid_step = args.grid_step;
    pa.floor_db = args.floor_db;
    p = build_pattern(pa);
    elements = args.elements;
    spacing = args.spacing;
  } else if (args.in == "-") {
    p = read_pattern_csv(std::cin);
  } else {
    std::ifstream in(args.in);
    if (!in) throw IoError("cannot open pattern file: " + args.in);
    p = read_pattern_csv(in);
  }

  const LobeReport report = analyze(p, args.floor_db);
  with_output(args.out, [&](std::ostream& os) {
    os << format_metrics_record(report, elements, spacing);
  });
  return 0;
}

namespace {

ProblemSpec problem_from_args(const OptimizeArgs& args,
                              const ConfigFile& config) {
  ProblemSpec problem;
  problem.kind = args.objective.empty()
                     ? config.get_string("objective", "kind", "bowl")
                     : args.objective;
  if (problem.kind == "sll") {
    problem.synthesis = synthesis_spec_from_config(config);
    problem.dimension = problem.synthesis->variable_count();
    problem.box_lo = problem.synthesis->bounds.front().lo;
    problem.box_hi = problem.synthesis->bounds.front().hi;
    return problem;
  }
  if (problem.kind != "bowl" && problem.kind != "tangential_bowl")
    throw UsageError("unknown objective '" + problem.kind + "'");

  const bool tangential = problem.kind == "tangential_bowl";
  problem.dimension = tangential
                          ? 2
                          : static_cast<std::size_t>(args.dimension.value_or(
                                config.get_int("objective", "dimension", 2)));
  const double default_lo = tangential ? -500.0 : -100.0;
  const double default_hi = tangential ? 500.0 : 100.0;
  problem.box_lo = args.box_lo.value_or(
      config.get_double("objective", "box_lo", default_lo));
  problem.box_hi = args.box_hi.value_or(
      config.get_double("objective", "box_hi", default_hi));
  return problem;
}

}  // namespace

int cmd_optimize(const OptimizeArgs& args) {
  ConfigFile config;
  if (!args.config_path.empty()) {
    try {
      config = ConfigFile::load(args.config_path);
    } catch (const std::runtime_error& e) {
      throw IoError(e.what());
    }
  }

  const std::string algo = args.algo.empty()
                               ? config.get_string("optimizer", "algo", "ahcoa")
                               : args.algo;
  if (algo != "ahcoa" && algo != "alo" && algo != "pso")
    throw UsageError("unknown algorithm '" + algo + "'");

  const ProblemSpec problem = problem_from_args(args, config);
  const Objective objective = objective_from_problem(problem);

  RunArtifact artifact;
  artifact.version = kVersion;
  artifact.algo = algo;
  artifact.problem = problem;

  const auto t0 = std::chrono::steady_clock::now();
  RunResult result;
  if (algo == "ahcoa") {
    AhcoaConfig cfg = ahcoa_config_from_config(config);
    if (args.population) cfg.population = *args.population;
    if (args.iterations) cfg.max_iterations = *args.iterations;
    if (args.seed) cfg.seed = *args.seed;
    cfg.validate();
    result = run_ahcoa(cfg, objective);
    artifact.seed = cfg.seed;
    artifact.config_echo = cfg.echo();
    artifact.iterations = cfg.max_iterations;
    if (!args.quiet) write_elite_log(std::cout, result.trace, 50);
  } else if (algo == "alo") {
    AloConfig cfg = alo_config_from_config(config);
    if (args.population) cfg.population = *args.population;
    if (args.iterations) cfg.max_iterations = *args.iterations;
    if (args.seed) cfg.seed = *args.seed;
    cfg.validate();
    result = run_alo(cfg, objective);
    artifact.seed = cfg.seed;
    artifact.config_echo = cfg.echo();
    artifact.iterations = cfg.max_iterations;
    if (!args.quiet) write_iteration_log(std::cout, result.trace);
  } else {
    PsoConfig cfg = pso_config_from_config(config);
    if (args.population) cfg.population = *args.population;
    if (args.iterations) cfg.max_iterations = *args.iterations;
    if (args.seed) cfg.seed = *args.seed;
    cfg.validate();
    result = run_pso(cfg, objective);
    artifact.seed = cfg.seed;
    artifact.config_echo = cfg.echo();
    artifact.iterations = cfg.max_iterations;
    if (!args.quiet) write_iteration_log(std::cout, result.trace);
  }
  artifact.duration_seconds = std::chrono::duration<double>(
                                  std::chrono::steady_clock::now() - t0)
                                  .count();

  artifact.best_vector = result.best_vector;
  artifact.best_fitness = result.best_fitness;
  artifact.trace = result.trace.entries;

  if (problem.synthesis) {
    const auto& spec = *problem.synthesis;
    if (spec.mode == SynthesisMode::amplitude) {
      artifact.decoded_amplitudes = decode_amplitudes(spec, result.best_vector);
    } else {
      artifact.decoded_positions =
          decode_positions(spec, result.best_vector).half_positions;
    }
  }

  artifact.recheck_fitness = objective.evaluate(artifact.best_vector);
  const std::string path = resolve_output_path(
      args.artifact_path.empty() ? "run_artifact.json" : args.artifact_path);
  try {
    save(artifact, path);
  } catch (const std::runtime_error& e) {
    throw IoError(e.what());
  }

  std::cout << "algo=" << algo << " seed=" << artifact.seed
            << " best_fitness=" << format_double(artifact.best_fitness)
            << " artifact=" << path << '\n';

  if (artifact.recheck_fitness != artifact.best_fitness)
    throw SelfCheckError(
        "self-check failed: recomputed cost " +
        format_double(artifact.recheck_fitness) + " does not reproduce " +
        format_double(artifact.best_fitness));
  return 0;
}

int cmd_bench(const BenchArgs& args) {
  const bool all = args.suite == "all";
  if (!all && args.suite != "lobes" && args.suite != "fnbw" &&
      args.suite != "packing")
    throw UsageError("unknown bench suite '" + args.suite + "'");

  auto write_suite = [&](const std::string& name, auto&& fn) {
    std::string path = name + ".csv";
    if (!args.out_dir.empty())
      path = (fs::path(args.out_dir) / path).string();
    path = resolve_output_path(path);
    std::ofstream file(path);
    if (!file) throw IoError("cannot open output file: " + path);
    fn(file);
    if (!file) throw IoError("failed while writing: " + path);
    std::cout << "wrote " << path << '\n';
  };

  if (!args.out_dir.empty()) {
    std::error_code ec;
    fs::create_directories(resolve_output_path(args.out_dir), ec);
    if (ec)
      throw IoError("cannot create output directory '" + args.out_dir +
                    "': " + ec.message());
  }
  if (all || args.suite == "lobes") write_suite("bench_lobes", bench_lobes);
  if (all || args.suite == "fnbw") write_suite("bench_fnbw", bench_fnbw);
  if (all || args.suite == "packing")
    write_suite("bench_packing", bench_packing);
  return 0;
}

}  // namespace anthill::tool
