#include "rsnc/harness.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

#include "rsnc/baselines.hpp"

namespace rsnc {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Uniform double in [0, 1) from the top 53 bits: keeps the draw sequence
// independent of the standard library's distribution implementation.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + uniform01(rng) * (hi - lo);
}

void require_config(const GenConfig& c) {
  auto fail = [](const std::string& msg) {
    throw std::invalid_argument("invalid generator config: " + msg);
  };
  if (c.n < 1) fail("n must be at least 1");
  if (c.m < 1) fail("m must be at least 1");
  if (!(c.rmin > 0.0) || c.rmax < c.rmin) fail("need 0 < rmin <= rmax");
  if (!(c.tmin > 0.0) || c.tmax < c.tmin) fail("need 0 < tmin <= tmax");
  if (!(c.packet_size > 0.0)) fail("packet_size must be positive");
  if (!(c.has_density > 0.0) || c.has_density > 1.0)
    fail("has_density must be in (0, 1]");
  if (!(c.wants_density > 0.0) || c.wants_density > 1.0)
    fail("wants_density must be in (0, 1]");
  if (!(c.alpha > 0.0)) fail("alpha must be positive");
}

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t grid_index,
                          std::uint64_t sample_index) {
  return splitmix64(splitmix64(master ^ splitmix64(grid_index + 1)) ^
                    (sample_index + 1));
}

Scenario generate_scenario(const GenConfig& config) {
  require_config(config);
  std::mt19937_64 rng(config.seed);

  Scenario s;
  s.packet_size = config.packet_size;
  s.n_packets = config.n;
  s.benefits.assign(config.n, config.alpha);
  s.destinations.resize(config.m);
  for (auto& d : s.destinations) {
    d.max_rate = uniform(rng, config.rmin, config.rmax);
    for (std::int32_t j = 0; j < config.n; ++j) {
      const PacketId p{j};
      if (uniform01(rng) < config.wants_density) {
        d.wants.insert(p);
        d.deadlines[p] = uniform(rng, config.tmin, config.tmax);
      } else if (uniform01(rng) < config.has_density) {
        d.has.insert(p);
      }
    }
  }
  return s;
}

double deadline_miss_ratio(const TransmissionLog& log, const Scenario& s) {
  std::set<std::pair<DestId, PacketId>> requests;
  for (std::size_t i = 0; i < s.destinations.size(); ++i) {
    for (PacketId p : s.destinations[i].wants)
      requests.insert({DestId{static_cast<std::int32_t>(i)}, p});
  }
  std::set<std::pair<DestId, PacketId>> covered;
  for (const auto& o : log.outcomes) covered.insert({o.dest, o.packet});
  if (covered != requests)
    throw std::invalid_argument(
        "log outcomes do not cover the scenario's request set");
  if (requests.empty()) return 0.0;
  return static_cast<double>(log.miss_count()) /
         static_cast<double>(requests.size());
}

SingleTxPoint single_tx_tradeoff(const Scenario& s, const CodingGraph& g,
                                 double rate) {
  SingleTxPoint point;
  // Largest set servable by one transmission at this rate: receivable on
  // every member link and fast enough for every member deadline.
  CliqueResult clique = max_weight_clique(g, [&](const Vertex& v) {
    return rate <= s.max_rate(v.dest) + kEps &&
           s.packet_size / s.deadline(v.dest, v.packet) <= rate + kEps;
  });
  point.satisfied = static_cast<int>(clique.members.size());
  const std::set<std::size_t> members(clique.members.begin(),
                                      clique.members.end());
  const double delay = s.packet_size / rate;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (members.count(i)) continue;
    const Vertex& v = g.vertices[i];
    if (delay + s.packet_size / s.max_rate(v.dest) >
        s.deadline(v.dest, v.packet) + kEps)
      point.failed += 1;
  }
  return point;
}

namespace {

GenConfig experiment_base() {
  GenConfig c;
  c.n = 10;
  c.m = 10;
  c.rmin = 10.0;
  c.rmax = 100.0;
  c.tmin = 10.0;
  c.tmax = 50.0;
  // Airtimes of 3-30 time units against deadlines of 10-50 keep every rate
  // band loaded enough that scheduler quality, not slack, decides outcomes.
  c.packet_size = 300.0;
  return c;
}

std::string label_rates(double rmin, double rmax) {
  return "rmin=" + format_double(rmin) + ";rmax=" + format_double(rmax);
}

}  // namespace

ExperimentConfig make_experiment(const std::string& name) {
  ExperimentConfig e;
  e.name = name;
  if (name == "single-tx-tradeoff") {
    e.kind = ExperimentConfig::Kind::single_tx;
    GenConfig c = experiment_base();
    c.m = 20;
    e.grid.push_back({"base", c});
    for (int r = 10; r <= 100; r += 10) e.rate_grid.push_back(r);
    e.algorithms.clear();
  } else if (name == "rate-sweep") {
    for (auto [lo, hi] : {std::pair{10.0, 50.0}, std::pair{50.0, 100.0}}) {
      GenConfig c = experiment_base();
      c.rmin = lo;
      c.rmax = hi;
      e.grid.push_back({label_rates(lo, hi), c});
    }
  } else if (name == "m-sweep") {
    for (auto [lo, hi] : {std::pair{10.0, 50.0}, std::pair{50.0, 100.0}}) {
      for (int m = 5; m <= 15; ++m) {
        GenConfig c = experiment_base();
        c.rmin = lo;
        c.rmax = hi;
        c.m = m;
        e.grid.push_back({"m=" + std::to_string(m) + ";" + label_rates(lo, hi), c});
      }
    }
  } else if (name == "n-sweep") {
    for (double tmax : {50.0, 80.0}) {
      for (int n = 10; n <= 40; n += 5) {
        GenConfig c = experiment_base();
        c.rmin = 10.0;
        c.rmax = 50.0;
        c.tmax = tmax;
        c.n = n;
        e.grid.push_back({"n=" + std::to_string(n) +
                              ";tmax=" + format_double(tmax),
                          c});
      }
    }
  } else {
    throw std::invalid_argument("unknown experiment: " + name);
  }
  return e;
}

namespace {

void apply_config_field(GenConfig& c, const std::string& key,
                        const nlohmann::json& value) {
  if (key == "n") c.n = value.get<int>();
  else if (key == "m") c.m = value.get<int>();
  else if (key == "rmin") c.rmin = value.get<double>();
  else if (key == "rmax") c.rmax = value.get<double>();
  else if (key == "tmin") c.tmin = value.get<double>();
  else if (key == "tmax") c.tmax = value.get<double>();
  else if (key == "packet_size") c.packet_size = value.get<double>();
  else if (key == "has_density") c.has_density = value.get<double>();
  else if (key == "wants_density") c.wants_density = value.get<double>();
  else if (key == "alpha") c.alpha = value.get<double>();
  else if (key == "seed") c.seed = value.get<std::uint64_t>();
  else if (key != "label")
    throw std::invalid_argument("unknown generator config field: " + key);
}

}  // namespace

ExperimentConfig experiment_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("experiment parse error: ") +
                                e.what());
  }
  try {
    ExperimentConfig e;
    e.name = j.value("name", "custom");
    const std::string kind = j.value("kind", "schedulers");
    if (kind == "schedulers") {
      e.kind = ExperimentConfig::Kind::schedulers;
    } else if (kind == "single-tx") {
      e.kind = ExperimentConfig::Kind::single_tx;
    } else {
      throw std::invalid_argument("unknown experiment kind: " + kind);
    }
    e.samples = j.value("samples", 100);
    if (j.contains("algorithms"))
      e.algorithms = j.at("algorithms").get<std::vector<std::string>>();
    if (e.kind == ExperimentConfig::Kind::single_tx) e.algorithms.clear();
    GenConfig base;
    if (j.contains("base")) {
      for (const auto& [key, value] : j.at("base").items())
        apply_config_field(base, key, value);
    }
    if (j.contains("grid")) {
      for (const auto& point : j.at("grid")) {
        GenConfig c = base;
        for (const auto& [key, value] : point.items())
          apply_config_field(c, key, value);
        e.grid.push_back({point.value("label", ""), c});
      }
    } else {
      e.grid.push_back({"base", base});
    }
    for (std::size_t i = 0; i < e.grid.size(); ++i) {
      if (e.grid[i].label.empty())
        e.grid[i].label = "point" + std::to_string(i);
    }
    if (j.contains("rate_grid"))
      e.rate_grid = j.at("rate_grid").get<std::vector<double>>();
    if (e.kind == ExperimentConfig::Kind::single_tx && e.rate_grid.empty())
      throw std::invalid_argument("single-tx experiment needs a rate_grid");
    if (j.contains("oracle_max_vertices"))
      e.oracle_limits.max_vertices = j.at("oracle_max_vertices").get<std::size_t>();
    return e;
  } catch (const nlohmann::json::exception& ex) {
    throw std::invalid_argument(std::string("experiment field error: ") +
                                ex.what());
  }
}

namespace {

struct Accumulator {
  std::vector<double> values;

  void add(double v) { values.push_back(v); }
  int count() const { return static_cast<int>(values.size()); }
  double mean() const {
    if (values.empty()) return 0.0;
    double sum = 0.0;
    for (double v : values) sum += v;
    return sum / static_cast<double>(values.size());
  }
  // Sample standard deviation; 0 for fewer than two values.
  double stddev() const {
    if (values.size() < 2) return 0.0;
    const double m = mean();
    double sq = 0.0;
    for (double v : values) sq += (v - m) * (v - m);
    return std::sqrt(sq / static_cast<double>(values.size() - 1));
  }
};

std::optional<TransmissionLog> run_algorithm(const std::string& algo,
                                             const Scenario& s,
                                             const OracleLimits& limits) {
  if (algo == "rsnc") return run_rsnc(s);
  if (algo == "dsf") return run_dsf(s);
  if (algo == "sin1") return run_sin1(s);
  if (algo == "oracle") {
    try {
      return optimal_schedule(s, limits).best_log;
    } catch (const LimitError&) {
      return std::nullopt;  // counted as a skipped sample
    }
  }
  throw std::invalid_argument("unknown algorithm: " + algo);
}

}  // namespace

ResultsTable run_experiment(const ExperimentConfig& config,
                            std::uint64_t master_seed, bool measure_runtime) {
  ResultsTable table;
  for (std::size_t gi = 0; gi < config.grid.size(); ++gi) {
    const GridPoint& point = config.grid[gi];

    if (config.kind == ExperimentConfig::Kind::single_tx) {
      std::vector<Accumulator> satisfied(config.rate_grid.size());
      std::vector<Accumulator> failed(config.rate_grid.size());
      for (int si = 0; si < config.samples; ++si) {
        GenConfig c = point.config;
        c.seed = derive_seed(master_seed, gi, si);
        const Scenario s = generate_scenario(c);
        const CodingGraph g = build_graph(s);
        for (std::size_t ri = 0; ri < config.rate_grid.size(); ++ri) {
          const SingleTxPoint p = single_tx_tradeoff(s, g, config.rate_grid[ri]);
          satisfied[ri].add(p.satisfied);
          failed[ri].add(p.failed);
        }
      }
      for (std::size_t ri = 0; ri < config.rate_grid.size(); ++ri) {
        for (const auto* which : {"satisfied", "failed"}) {
          const Accumulator& acc =
              std::string(which) == "satisfied" ? satisfied[ri] : failed[ri];
          ResultRow row;
          row.experiment = config.name;
          row.grid_point = point.label + ";rate=" +
                           format_double(config.rate_grid[ri]);
          row.algorithm = which;
          row.samples = acc.count();
          row.mean_miss_ratio = acc.mean();
          row.std_miss_ratio = acc.stddev();
          row.mean_transmissions = 1.0;
          row.mean_runtime_us = 0.0;
          table.rows.push_back(std::move(row));
        }
      }
      continue;
    }

    for (const std::string& algo : config.algorithms) {
      Accumulator miss, txs, runtime;
      for (int si = 0; si < config.samples; ++si) {
        GenConfig c = point.config;
        c.seed = derive_seed(master_seed, gi, si);
        const Scenario s = generate_scenario(c);
        const auto start = std::chrono::steady_clock::now();
        const auto log = run_algorithm(algo, s, config.oracle_limits);
        const auto stop = std::chrono::steady_clock::now();
        if (!log) {
          table.skipped_samples += 1;
          continue;
        }
        miss.add(deadline_miss_ratio(*log, s));
        txs.add(static_cast<double>(log->transmissions.size()));
        if (measure_runtime)
          runtime.add(std::chrono::duration<double, std::micro>(stop - start)
                          .count());
      }
      ResultRow row;
      row.experiment = config.name;
      row.grid_point = point.label;
      row.algorithm = algo;
      row.samples = miss.count();
      row.mean_miss_ratio = miss.mean();
      row.std_miss_ratio = miss.stddev();
      row.mean_transmissions = txs.mean();
      row.mean_runtime_us = measure_runtime ? runtime.mean() : 0.0;
      table.rows.push_back(std::move(row));
    }
  }
  return table;
}

std::string results_to_csv(const ResultsTable& table) {
  std::string out =
      "experiment,grid_point,algorithm,samples,mean_miss_ratio,"
      "std_miss_ratio,mean_transmissions,mean_runtime_us\n";
  for (const auto& row : table.rows) {
    out += row.experiment;
    out += ',';
    out += row.grid_point;
    out += ',';
    out += row.algorithm;
    out += ',';
    out += std::to_string(row.samples);
    out += ',';
    out += format_double(row.mean_miss_ratio);
    out += ',';
    out += format_double(row.std_miss_ratio);
    out += ',';
    out += format_double(row.mean_transmissions);
    out += ',';
    out += format_double(row.mean_runtime_us);
    out += '\n';
  }
  return out;
}

namespace {

std::string request_names(const std::vector<RequestRef>& refs) {
  if (refs.empty()) return "{}";
  std::string out = "{";
  for (std::size_t i = 0; i < refs.size(); ++i) {
    if (i) out += ",";
    out += "d" + std::to_string(refs[i].first.v) + ":p" +
           std::to_string(refs[i].second.v);
  }
  return out + "}";
}

}  // namespace

std::string render_trace(const Scenario& s) {
  std::ostringstream out;
  int rounds = 0;
  TransmissionLog log = run_rsnc(s, [&](const RoundTrace& trace) {
    rounds = trace.round;
    out << "round " << trace.round << "  t=" << format_double(trace.start_time)
        << "  vertices=" << trace.graph_vertices << "\n";
    for (const auto& cand : trace.candidates) {
      out << "  k=" << (cand.rate_index + 1)
          << "  rate>=" << format_double(cand.threshold)
          << "  serves=" << (cand.eligible ? request_names(cand.f) : "none")
          << "  loss=" << cand.l.size() << "  U=" << format_double(cand.u)
          << (cand.eligible ? "" : "  (not selectable)") << "\n";
    }
    const auto& d = trace.decision;
    out << "  -> k=" << (d.chosen_rate_index + 1) << "  send {";
    bool first = true;
    for (PacketId p : d.transmission.coded_set) {
      if (!first) out << "^";
      out << "p" << p.v;
      first = false;
    }
    out << "} at rate " << format_double(d.transmission.rate) << " (airtime "
        << format_double(d.transmission.delay) << ", U="
        << format_double(d.u_value) << ")\n";
  });
  out << "rounds: " << rounds
      << "  transmissions: " << log.transmissions.size()
      << "  misses: " << log.miss_count() << " of " << log.outcomes.size()
      << "\n";
  return out.str();
}

}  // namespace rsnc
