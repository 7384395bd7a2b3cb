// Command-line front end: scenario generation, scheduler runs, experiment
// sweeps, and a planning trace. Exit codes: 0 success, 2 invalid input,
// 3 oracle limits exceeded.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "rsnc/baselines.hpp"
#include "rsnc/harness.hpp"
#include "rsnc/json_io.hpp"
#include "rsnc/oracle.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 2;
constexpr int kExitLimitExceeded = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << text;
}

rsnc::GenConfig gen_config_from_file(const std::string& path) {
  // Reuse the experiment parser for the flat config object.
  const std::string text = read_file(path);
  const std::string wrapped = "{\"base\":" + text + "}";
  return rsnc::experiment_from_json(wrapped).grid.at(0).config;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"deadline-aware rate selection and network coding scheduler"};
  app.require_subcommand(1);

  std::string config_path, scenario_path, output_path, algo, experiment;
  std::uint64_t seed = 0;
  bool seed_given = false;
  int samples = -1;
  std::size_t oracle_cap = 8;
  bool timing = false;

  auto* gen = app.add_subcommand("gen", "generate a random scenario");
  gen->add_option("--config", config_path, "generator config JSON file")
      ->required();
  gen->add_option("--seed", seed, "seed override")->each([&](const std::string&) {
    seed_given = true;
  });
  gen->add_option("-o,--output", output_path, "output path (default stdout)");

  auto* run = app.add_subcommand("run", "run one scheduler on a scenario");
  run->add_option("--algo", algo, "rsnc | dsf | sin1 | oracle")->required();
  run->add_option("--scenario", scenario_path, "scenario JSON file")->required();
  run->add_option("-o,--output", output_path, "output path (default stdout)");
  run->add_option("--oracle-max-vertices", oracle_cap,
                  "oracle instance size cap");

  auto* sweep = app.add_subcommand("sweep", "run an experiment grid");
  sweep->add_option("--experiment", experiment,
                    "built-in name or custom JSON file")
      ->required();
  sweep->add_option("--samples", samples, "samples per grid point");
  sweep->add_option("--seed", seed, "master seed");
  sweep->add_option("-o,--output", output_path, "output path (default stdout)");
  sweep->add_flag("--timing", timing,
                  "measure wall-clock runtimes (breaks byte-identical reruns)");

  auto* trace = app.add_subcommand("trace", "print the planning trace");
  trace->add_option("--scenario", scenario_path, "scenario JSON file")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  try {
    if (gen->parsed()) {
      rsnc::GenConfig config = gen_config_from_file(config_path);
      if (seed_given) config.seed = seed;
      write_output(output_path,
                   rsnc::scenario_to_json(rsnc::generate_scenario(config)));
    } else if (run->parsed()) {
      const rsnc::Scenario s =
          rsnc::scenario_from_json(read_file(scenario_path));
      rsnc::TransmissionLog log;
      if (algo == "rsnc") {
        log = rsnc::run_rsnc(s);
      } else if (algo == "dsf") {
        log = rsnc::run_dsf(s);
      } else if (algo == "sin1") {
        log = rsnc::run_sin1(s);
      } else if (algo == "oracle") {
        rsnc::OracleLimits limits;
        limits.max_vertices = oracle_cap;
        log = rsnc::optimal_schedule(s, limits).best_log;
      } else {
        throw std::invalid_argument("unknown algorithm: " + algo);
      }
      write_output(output_path, rsnc::log_to_json(log));
    } else if (sweep->parsed()) {
      rsnc::ExperimentConfig config;
      if (experiment.find(".json") != std::string::npos ||
          experiment.find('/') != std::string::npos) {
        config = rsnc::experiment_from_json(read_file(experiment));
      } else {
        config = rsnc::make_experiment(experiment);
      }
      if (samples >= 0) config.samples = samples;
      const rsnc::ResultsTable table =
          rsnc::run_experiment(config, seed, timing);
      if (table.skipped_samples > 0)
        std::cerr << "skipped " << table.skipped_samples
                  << " sample(s) beyond oracle limits\n";
      write_output(output_path, rsnc::results_to_csv(table));
    } else if (trace->parsed()) {
      const rsnc::Scenario s =
          rsnc::scenario_from_json(read_file(scenario_path));
      std::cout << rsnc::render_trace(s);
    }
  } catch (const rsnc::LimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitLimitExceeded;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  return kExitOk;
}
