#include "rsnc/oracle.hpp"

#include <algorithm>
#include <limits>

#include "delivery.hpp"

namespace rsnc {

namespace {

// Safety margin for the pruning bound, far wider than the comparison
// tolerance: a request only counts as unavoidably lost when even its own
// best-rate arrival overshoots the deadline by more than this.
constexpr double kBoundMargin = 1e-6;

struct Search {
  const Scenario& original;
  int total_requests;
  int depth_cap;

  int best_misses = std::numeric_limits<int>::max();
  std::vector<Transmission> best_schedule;
  DeliveryTracker best_tracker;
  long schedules_explored = 0;

  void finish(const DeliveryTracker& tracker,
              const std::vector<Transmission>& schedule) {
    ++schedules_explored;
    const int misses = total_requests - tracker.on_time_count(original);
    if (misses < best_misses) {
      best_misses = misses;
      best_schedule = schedule;
      best_tracker = tracker;
    }
  }

  // Requests that cannot reach on-time delivery anymore: undelivered, and
  // either without a live vertex or past the point where even a dedicated
  // transmission at their own link rate would arrive in time.
  int unavoidable_misses(const Scenario& live, const CodingGraph& g,
                         const DeliveryTracker& tracker) const {
    int fixed = 0;
    for (std::size_t i = 0; i < live.destinations.size(); ++i) {
      const DestId d{static_cast<std::int32_t>(i)};
      for (PacketId p : live.destinations[i].wants) {
        if (tracker.is_delivered(d, p)) {
          if (tracker.delivered_at.at({d, p}) >
              original.deadline(d, p) + kEps)
            ++fixed;  // delivered late: a miss forever
          continue;
        }
        if (live.packet_size / live.max_rate(d) >
            live.deadline(d, p) + kBoundMargin)
          ++fixed;
        else if (g.index_of({d, p}) == CodingGraph::npos)
          ++fixed;
      }
    }
    return fixed;
  }

  void explore(const Scenario& live, const CodingGraph& g,
               const DeliveryTracker& tracker, double now,
               std::vector<Transmission>& schedule) {
    if (g.empty() || static_cast<int>(schedule.size()) >= depth_cap) {
      finish(tracker, schedule);
      return;
    }
    if (best_misses < std::numeric_limits<int>::max() &&
        unavoidable_misses(live, g, tracker) >= best_misses)
      return;

    for (const CliqueResult& clique : enumerate_cliques(g)) {
      Transmission tx = clique_to_transmission(g, clique.members, live);
      const double arrival = now + tx.delay;
      DeliveryTracker next_tracker = tracker;
      next_tracker.apply(live, tx, arrival);

      std::vector<Vertex> served;
      for (const Vertex& v : g.vertices) {
        if (next_tracker.is_delivered(v.dest, v.packet)) served.push_back(v);
      }
      CodingGraph next_graph = update_graph(g, live, tx.delay, served, {});
      Scenario next_live = advance_deadlines(live, tx.delay);

      schedule.push_back(tx);
      explore(next_live, next_graph, next_tracker, arrival, schedule);
      schedule.pop_back();
    }
  }
};

}  // namespace

OracleResult optimal_schedule(const Scenario& s, const OracleLimits& limits) {
  auto report = validate_scenario(s);
  if (!report.ok())
    throw std::invalid_argument("invalid scenario: " + report.issues.front());

  CodingGraph g = build_graph(s);
  if (g.size() > limits.max_vertices)
    throw LimitError("oracle refused: graph has " + std::to_string(g.size()) +
                     " vertices, cap is " + std::to_string(limits.max_vertices));

  Search search{s, s.request_count(),
                limits.max_transmissions < 0
                    ? static_cast<int>(g.size())
                    : limits.max_transmissions};
  // An empty graph falls straight through to the empty schedule.
  DeliveryTracker tracker;
  std::vector<Transmission> schedule;
  search.explore(s, g, tracker, 0.0, schedule);

  OracleResult out;
  out.best_log.algorithm = "oracle";
  out.best_log.transmissions = search.best_schedule;
  out.best_log.outcomes = search.best_tracker.outcomes(s);
  out.min_misses = search.best_misses;
  out.schedules_explored = search.schedules_explored;
  return out;
}

UMaxResult brute_force_u_max(const Scenario& s, const CodingGraph& g) {
  UMaxResult best;
  if (g.empty()) return best;

  const RateLadder ladder = RateLadder::from_scenario(s);
  const auto cliques = enumerate_cliques(g);

  bool have = false;
  double best_loss = 0.0;
  for (std::size_t k = 0; k < ladder.rates.size(); ++k) {
    for (const CliqueResult& clique : cliques) {
      Transmission tx;
      tx.rate = ladder.rates[k];
      tx.delay = s.packet_size / tx.rate;
      for (std::size_t idx : clique.members) {
        tx.coded_set.insert(g.vertices[idx].packet);
        tx.intended.insert(g.vertices[idx].dest);
      }

      const std::vector<RequestRef> f = compute_f(s, tx);
      const std::set<RequestRef> fset(f.begin(), f.end());
      double gain = 0.0, loss = 0.0;
      for (const auto& [d, p] : f) gain += s.benefit(p);
      for (const Vertex& v : g.vertices) {
        if (fset.count({v.dest, v.packet})) continue;
        if (tx.delay + s.packet_size / s.max_rate(v.dest) >
            s.deadline(v.dest, v.packet) + kEps)
          loss += s.benefit(v.packet);
      }
      const double u = gain - loss;

      bool take = false;
      if (!have) {
        take = true;
      } else if (u > best.u + kEps) {
        take = true;
      } else if (u >= best.u - kEps) {
        if (loss < best_loss - kEps) take = true;
        // equal u and loss: keep the earlier (lower rung, then lex-first
        // clique by enumeration order)
      }
      if (take) {
        best.clique = clique;
        best.rate_index = static_cast<int>(k);
        best.u = u;
        best_loss = loss;
        have = true;
      }
    }
  }
  return best;
}

}  // namespace rsnc
