#pragma once

#include <functional>
#include <utility>

#include "rsnc/clique.hpp"
#include "rsnc/coding_graph.hpp"

namespace rsnc {

using RequestRef = std::pair<DestId, PacketId>;

// Ascending distinct link rates of the scenario's destinations. Candidate
// transmission-rate thresholds: between two ladder values the receivable set
// of destinations does not change.
struct RateLadder {
  std::vector<double> rates;

  static RateLadder from_scenario(const Scenario& s);
};

// On-time delivery set of a transmission against the given deadlines: every
// request whose destination receives the payload, can decode its packet, and
// sees it arrive within the deadline.
std::vector<RequestRef> compute_f(const Scenario& s, const Transmission& tx);

// Definite-loss set: requests outside f whose deadline cannot survive this
// transmission's airtime followed by a dedicated send at their own best rate.
std::vector<RequestRef> compute_l(const Scenario& s, const Transmission& tx,
                                  const std::vector<RequestRef>& f);

// Net benefit of a transmission: benefit gained by on-time deliveries minus
// benefit of requests the airtime definitely kills. f and l must be disjoint.
double metric_u(const Scenario& s, const std::vector<RequestRef>& f,
                const std::vector<RequestRef>& l);

// One ladder rung considered by the planner (kept for tracing).
struct RateCandidate {
  int rate_index = -1;      // position in the ladder
  double threshold = 0.0;   // ladder rate at that position
  CliqueResult clique;      // best clique among vertices receivable at it
  std::vector<RequestRef> f;
  std::vector<RequestRef> l;
  double u = 0.0;
  bool eligible = false;    // a transmission can actually be formed
};

struct PropagationDecision {
  CliqueResult clique;
  Transmission transmission;
  double u_value = 0.0;
  std::vector<RequestRef> f;  // exactly the clique members
  std::vector<RequestRef> l;  // graph vertices the airtime dooms
  int chosen_rate_index = -1;
};

// Picks the next transmission: for every ladder rung, restrict the graph to
// vertices whose links sustain that rate, take the maximum-weight clique, and
// score it; return the rung with the highest score. Score ties prefer the
// smaller definite-loss mass, then the lower rung. Rungs where no clique
// exists are scored for the audit trail (loss at the rung's own rate) but
// cannot be chosen. The graph must be nonempty.
PropagationDecision plan_one_propagation(const Scenario& s,
                                         const CodingGraph& g,
                                         std::vector<RateCandidate>* audit = nullptr);

struct RoundTrace {
  int round = 0;
  double start_time = 0.0;
  std::size_t graph_vertices = 0;
  std::vector<RateCandidate> candidates;
  PropagationDecision decision;
};

using RoundObserver = std::function<void(const RoundTrace&)>;

// Full scheduler: repeatedly plan, transmit, account deliveries, drop served
// and doomed requests, shrink deadlines, and update the graph until no open
// request is still meetable. Outcomes are judged against the scenario's
// original deadlines. Deterministic; throws std::invalid_argument on invalid
// scenarios.
TransmissionLog run_rsnc(const Scenario& s, const RoundObserver& observer = {});

// Replays an arbitrary transmission sequence against a scenario with the same
// reception/decoding/deadline accounting the schedulers use. Arrival times
// are the cumulative delays of the sequence prefix.
TransmissionLog replay(const Scenario& s,
                       const std::vector<Transmission>& transmissions,
                       const std::string& algorithm_tag = "replay");

}  // namespace rsnc
