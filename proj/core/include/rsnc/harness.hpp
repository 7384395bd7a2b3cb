#pragma once

#include <cstdint>

#include "rsnc/oracle.hpp"
#include "rsnc/scheduler.hpp"

namespace rsnc {

// Random-instance knobs. Per destination, each packet independently becomes a
// wanted packet with probability wants_density, otherwise side information
// with probability has_density, keeping the two sets disjoint by
// construction. Rates and deadlines are uniform reals over their ranges.
struct GenConfig {
  int n = 10;                  // packets
  int m = 10;                  // destinations
  double rmin = 10.0;          // link rate range
  double rmax = 100.0;
  double tmin = 10.0;          // deadline range
  double tmax = 50.0;
  double packet_size = 100.0;
  double has_density = 0.5;
  double wants_density = 0.3;
  double alpha = 1.0;          // benefit of every packet
  std::uint64_t seed = 0;
};

// Deterministic in config and seed. Throws std::invalid_argument on bad
// ranges (nonpositive sizes, inverted ranges, densities outside (0, 1]).
Scenario generate_scenario(const GenConfig& config);

// Missed requests over total requests; 0 for a scenario with no requests.
// The log must cover exactly the scenario's request set.
double deadline_miss_ratio(const TransmissionLog& log, const Scenario& s);

// Satisfied/doomed request counts for a single transmission at a fixed rate:
// the largest clique servable on time at that rate, and how many remaining
// graph vertices the airtime would doom.
struct SingleTxPoint {
  int satisfied = 0;
  int failed = 0;
};
SingleTxPoint single_tx_tradeoff(const Scenario& s, const CodingGraph& g,
                                 double rate);

// One point of an experiment grid: a config plus the label that names it in
// the results table.
struct GridPoint {
  std::string label;
  GenConfig config;
};

struct ExperimentConfig {
  std::string name;
  // "schedulers" compares algorithms end to end; "single-tx" sweeps a rate
  // grid through the one-transmission tradeoff analysis.
  enum class Kind { schedulers, single_tx } kind = Kind::schedulers;
  int samples = 100;
  std::vector<std::string> algorithms = {"rsnc", "dsf", "sin1"};
  std::vector<GridPoint> grid;
  std::vector<double> rate_grid;  // single-tx only
  OracleLimits oracle_limits;
};

// Built-in experiments: "single-tx-tradeoff", "rate-sweep", "m-sweep",
// "n-sweep". Throws std::invalid_argument for unknown names.
ExperimentConfig make_experiment(const std::string& name);

// Parses a custom experiment from JSON.
ExperimentConfig experiment_from_json(const std::string& text);

struct ResultRow {
  std::string experiment;
  std::string grid_point;
  std::string algorithm;
  int samples = 0;
  double mean_miss_ratio = 0.0;
  double std_miss_ratio = 0.0;
  double mean_transmissions = 0.0;
  double mean_runtime_us = 0.0;
};

struct ResultsTable {
  std::vector<ResultRow> rows;
  int skipped_samples = 0;  // oracle refusals, counted not aggregated
};

// Runs every (grid point, algorithm) cell over `samples` scenarios seeded
// deterministically from the master seed, aggregating in sample order. With
// measure_runtime false (the default) the runtime column stays zero so that
// equal seeds give byte-identical CSVs. For single-tx experiments the rows
// carry mean satisfied/failed counts per rate under pseudo-algorithm labels
// "satisfied" and "failed".
ResultsTable run_experiment(const ExperimentConfig& config,
                            std::uint64_t master_seed,
                            bool measure_runtime = false);

// Fixed schema, fixed row order, locale-free shortest-round-trip numbers.
std::string results_to_csv(const ResultsTable& table);

// Per-sample seed stream: splitmix64 mix of master seed, grid index, and
// sample index, so any cell can be regenerated in isolation.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t grid_index,
                          std::uint64_t sample_index);

// Human-readable round-by-round planning trace of the scheduler on one
// scenario: every ladder rung's clique and score, and the chosen payload.
std::string render_trace(const Scenario& s);

}  // namespace rsnc
