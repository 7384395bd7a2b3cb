#pragma once

#include "rsnc/scheduler.hpp"

namespace rsnc {

struct OracleLimits {
  std::size_t max_vertices = 8;
  // Depth cap on schedules; <0 means the number of graph vertices, which no
  // schedule can exceed (every transmission serves at least one vertex).
  int max_transmissions = -1;
};

struct OracleResult {
  TransmissionLog best_log;
  int min_misses = 0;
  long schedules_explored = 0;
};

// Exhaustive search for a minimum-miss schedule: depth-first over every
// sequence of cliques of the evolving graph, scoring complete schedules with
// the shared delivery accounting. Branches whose already-unavoidable misses
// reach the incumbent are cut; the bound is conservative, so the result is
// exact. Deterministic (first minimum in enumeration order wins). Throws
// LimitError when the initial graph exceeds limits.max_vertices.
OracleResult optimal_schedule(const Scenario& s, const OracleLimits& limits = {});

struct UMaxResult {
  CliqueResult clique;    // empty for an empty graph
  int rate_index = -1;    // ladder position; -1 for the empty sentinel
  double u = 0.0;
};

// Exact maximizer of the single-transmission metric over every
// (clique, ladder rate) pair by enumeration: the payload is the clique's XOR,
// the rate is the ladder value itself, gains are scored with the physical
// on-time delivery set and losses over remaining graph vertices. Ties prefer
// the smaller loss mass, then the lower rung, then the lexicographically
// first clique. Empty graphs return the empty sentinel.
UMaxResult brute_force_u_max(const Scenario& s, const CodingGraph& g);

}  // namespace rsnc
