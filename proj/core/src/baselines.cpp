#include "rsnc/baselines.hpp"

#include <algorithm>
#include <limits>

#include "delivery.hpp"

namespace rsnc {

namespace {

void require_valid(const Scenario& s) {
  auto report = validate_scenario(s);
  if (!report.ok())
    throw std::invalid_argument("invalid scenario: " + report.issues.front());
}

}  // namespace

TransmissionLog run_dsf(const Scenario& s) {
  require_valid(s);
  TransmissionLog log;
  log.algorithm = "dsf";

  Scenario live = s;
  DeliveryTracker tracker;
  double now = 0.0;

  for (;;) {
    // Rebuild the decodability graph over open requests with time left and
    // weight them by urgency. Rebuilding each round keeps the weights in
    // step with the shrinking deadlines.
    CodingGraph graph = build_rate_agnostic_graph(live);
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < graph.size(); ++i) {
      const Vertex& v = graph.vertices[i];
      if (!tracker.is_delivered(v.dest, v.packet)) keep.push_back(i);
    }
    if (keep.empty()) break;

    CodingGraph g;
    for (std::size_t i : keep) {
      const Vertex& v = graph.vertices[i];
      g.vertices.push_back(v);
      g.weights.push_back(1.0 / live.deadline(v.dest, v.packet));
    }
    g.adj.assign(keep.size(), boost::dynamic_bitset<>(keep.size()));
    for (std::size_t a = 0; a < keep.size(); ++a) {
      for (std::size_t b = a + 1; b < keep.size(); ++b) {
        if (graph.adjacent(keep[a], keep[b])) {
          g.adj[a].set(b);
          g.adj[b].set(a);
        }
      }
    }

    CliqueResult clique = max_weight_clique(g);
    Transmission tx = clique_to_transmission(g, clique.members, live);
    now += tx.delay;
    tracker.apply(live, tx, now);
    live = advance_deadlines(live, tx.delay);
    log.transmissions.push_back(std::move(tx));
  }

  log.outcomes = tracker.outcomes(s);
  return log;
}

TransmissionLog run_sin1(const Scenario& s) {
  require_valid(s);
  TransmissionLog log;
  log.algorithm = "sin1";

  Scenario live = s;
  DeliveryTracker tracker;
  double now = 0.0;

  for (;;) {
    // Rank packets that still have at least one meetable open request by
    // urgency-per-request: slack of the most urgent open request divided by
    // the number of open requests for the packet.
    struct Entry {
      double min_deadline = std::numeric_limits<double>::infinity();
      int open_requests = 0;
      bool meetable = false;
    };
    std::map<PacketId, Entry> entries;
    for (std::size_t i = 0; i < live.destinations.size(); ++i) {
      const DestId d{static_cast<std::int32_t>(i)};
      for (PacketId p : live.destinations[i].wants) {
        if (tracker.is_delivered(d, p)) continue;
        const double t = live.deadline(d, p);
        if (!(t > 0.0)) continue;  // lapsed: a miss in waiting
        auto& e = entries[p];
        e.min_deadline = std::min(e.min_deadline, t);
        e.open_requests += 1;
        if (live.packet_size / live.max_rate(d) <= t + kEps) e.meetable = true;
      }
    }

    PacketId chosen{-1};
    double best_score = std::numeric_limits<double>::infinity();
    for (const auto& [p, e] : entries) {
      if (!e.meetable) continue;
      const double score = e.min_deadline / e.open_requests;
      if (score < best_score - kEps) {  // map order: ties keep smaller id
        best_score = score;
        chosen = p;
      }
    }
    if (chosen.v < 0) break;

    Transmission tx;
    tx.coded_set.insert(chosen);
    tx.rate = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < live.destinations.size(); ++i) {
      const DestId d{static_cast<std::int32_t>(i)};
      if (!live.destinations[i].wants.count(chosen)) continue;
      if (tracker.is_delivered(d, chosen)) continue;
      const double t = live.deadline(d, chosen);
      if (!(t > 0.0)) continue;
      if (live.packet_size / live.max_rate(d) <= t + kEps)
        tx.rate = std::min(tx.rate, live.max_rate(d));
    }
    tx.delay = live.packet_size / tx.rate;
    for (std::size_t i = 0; i < live.destinations.size(); ++i) {
      const DestId d{static_cast<std::int32_t>(i)};
      if (!live.destinations[i].wants.count(chosen)) continue;
      if (tracker.is_delivered(d, chosen)) continue;
      const double t = live.deadline(d, chosen);
      if (t > 0.0 && receives(live, d, tx.rate) && tx.delay <= t + kEps)
        tx.intended.insert(d);
    }

    now += tx.delay;
    tracker.apply(live, tx, now);
    live = advance_deadlines(live, tx.delay);
    log.transmissions.push_back(std::move(tx));
  }

  log.outcomes = tracker.outcomes(s);
  return log;
}

}  // namespace rsnc
