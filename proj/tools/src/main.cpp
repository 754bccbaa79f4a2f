#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "anthill/version.hpp"
#include "commands.hpp"

namespace {

using anthill::tool::BenchArgs;
using anthill::tool::MetricsArgs;
using anthill::tool::OptimizeArgs;
using anthill::tool::PatternArgs;

int dispatch(CLI::App& app, const std::function<int()>& run) {
  try {
    return run();
  } catch (const anthill::tool::UsageError& e) {
    std::cerr << app.get_name() << ": " << e.what() << '\n';
    return 2;
  } catch (const anthill::tool::IoError& e) {
    std::cerr << app.get_name() << ": " << e.what() << '\n';
    return 1;
  } catch (const anthill::tool::SelfCheckError& e) {
    std::cerr << app.get_name() << ": " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    // Core validation rejected a value; that's a usage problem.
    std::cerr << app.get_name() << ": " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << app.get_name() << ": " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << app.get_name() << ": internal error: " << e.what() << '\n';
    return 3;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linear antenna array synthesis and analysis"};
  app.set_version_flag("--version", std::string("anthill ") + anthill::kVersion);
  app.require_subcommand(1);

  PatternArgs pattern_args;
  auto* pattern = app.add_subcommand(
      "pattern", "Sample a far-field pattern and emit it as CSV");
  pattern->add_option("--elements", pattern_args.elements,
                      "Number of elements in a uniform array");
  pattern->add_option("--spacing", pattern_args.spacing,
                      "Uniform element spacing in wavelengths");
  pattern->add_option("--positions", pattern_args.positions,
                      "Explicit element positions (overrides --elements)")
      ->delimiter(',');
  pattern->add_option("--amplitudes", pattern_args.amplitudes,
                      "Per-element amplitudes (default uniform)")
      ->delimiter(',');
  pattern->add_option("--phases", pattern_args.phases,
                      "Per-element phases in radians (default zero)")
      ->delimiter(',');
  pattern->add_option("--grid-start", pattern_args.grid_start,
                      "First zenith angle in degrees");
  pattern->add_option("--grid-end", pattern_args.grid_end,
                      "Last zenith angle in degrees");
  pattern->add_option("--grid-step", pattern_args.grid_step,
                      "Angle step in degrees");
  pattern->add_option("--floor-db", pattern_args.floor_db,
                      "Clamp for the normalized dB pattern");
  pattern->add_option("--out", pattern_args.out,
                      "Output file (default stdout)");

  MetricsArgs metrics_args;
  auto* metrics = app.add_subcommand(
      "metrics", "Report lobe counts, peak SLL and FNBW for a pattern");
  metrics->add_option("--in", metrics_args.in,
                      "Pattern CSV to analyze ('-' for stdin); when omitted "
                      "the pattern is computed from --elements/--spacing");
  metrics->add_option("--elements", metrics_args.elements,
                      "Number of elements in a uniform array");
  metrics->add_option("--spacing", metrics_args.spacing,
                      "Uniform element spacing in wavelengths");
  metrics->add_option("--grid-step", metrics_args.grid_step,
                      "Angle step in degrees for computed patterns");
  metrics->add_option("--floor-db", metrics_args.floor_db,
                      "Lobe-detection floor in dB");
  metrics->add_option("--out", metrics_args.out,
                      "Output file (default stdout)");

  OptimizeArgs optimize_args;
  auto* optimize = app.add_subcommand(
      "optimize", "Run an optimizer and save a verifiable run artifact");
  optimize->add_option("--config", optimize_args.config_path,
                       "INI config with [objective]/[synthesis]/[optimizer]");
  optimize->add_option("--algo", optimize_args.algo,
                       "ahcoa | alo | pso (default ahcoa)");
  optimize->add_option("--objective", optimize_args.objective,
                       "bowl | tangential_bowl | sll");
  optimize->add_option("--dim", optimize_args.dimension,
                       "Bowl dimension (bowl objective only)");
  optimize->add_option("--box-lo", optimize_args.box_lo, "Box lower bound");
  optimize->add_option("--box-hi", optimize_args.box_hi, "Box upper bound");
  optimize->add_option("--population", optimize_args.population,
                       "Population size");
  optimize->add_option("--iterations", optimize_args.iterations,
                       "Iteration count");
  optimize->add_option("--seed", optimize_args.seed, "Random seed");
  optimize->add_option("--artifact", optimize_args.artifact_path,
                       "Artifact path (default run_artifact.json)");
  optimize->add_flag("--quiet", optimize_args.quiet,
                     "Suppress per-iteration progress lines");

  BenchArgs bench_args;
  auto* bench = app.add_subcommand(
      "bench", "Write the deterministic validation tables as CSV");
  bench->add_option("--suite", bench_args.suite,
                    "lobes | fnbw | packing | all (default all)");
  bench->add_option("--out-dir", bench_args.out_dir,
                    "Directory for the CSV files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // prints help, exits 0
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the message
    return 2;
  }

  if (pattern->parsed())
    return dispatch(app, [&] { return cmd_pattern(pattern_args); });
  if (metrics->parsed())
    return dispatch(app, [&] { return cmd_metrics(metrics_args); });
  if (optimize->parsed())
    return dispatch(app, [&] { return cmd_optimize(optimize_args); });
  if (bench->parsed())
    return dispatch(app, [&] { return cmd_bench(bench_args); });
  std::cerr << "no subcommand selected\n";
  return 2;
}
