#include "rsnc/scheduler.hpp"

#include <algorithm>
#include <limits>

#include "delivery.hpp"

namespace rsnc {

RateLadder RateLadder::from_scenario(const Scenario& s) {
  std::set<double> distinct;
  for (const auto& d : s.destinations) distinct.insert(d.max_rate);
  RateLadder ladder;
  ladder.rates.assign(distinct.begin(), distinct.end());
  return ladder;
}

std::vector<RequestRef> compute_f(const Scenario& s, const Transmission& tx) {
  std::vector<RequestRef> f;
  for (std::size_t i = 0; i < s.destinations.size(); ++i) {
    const DestId d{static_cast<std::int32_t>(i)};
    auto p = decodes(s, d, tx);
    if (!p) continue;
    if (tx.delay <= s.deadline(d, *p) + kEps) f.push_back({d, *p});
  }
  return f;
}

std::vector<RequestRef> compute_l(const Scenario& s, const Transmission& tx,
                                  const std::vector<RequestRef>& f) {
  const std::set<RequestRef> served(f.begin(), f.end());
  std::vector<RequestRef> l;
  for (std::size_t i = 0; i < s.destinations.size(); ++i) {
    const DestId d{static_cast<std::int32_t>(i)};
    for (PacketId p : s.destinations[i].wants) {
      if (served.count({d, p})) continue;
      // Even an immediate follow-up at the destination's own best rate
      // arrives after deadline once this transmission's airtime has passed.
      if (tx.delay + s.packet_size / s.max_rate(d) > s.deadline(d, p) + kEps)
        l.push_back({d, p});
    }
  }
  return l;
}

double metric_u(const Scenario& s, const std::vector<RequestRef>& f,
                const std::vector<RequestRef>& l) {
  const std::set<RequestRef> fset(f.begin(), f.end());
  double u = 0.0;
  for (const auto& [d, p] : f) u += s.benefit(p);
  for (const auto& [d, p] : l) {
    if (fset.count({d, p}))
      throw std::invalid_argument("f and l overlap in metric_u");
    u -= s.benefit(p);
  }
  return u;
}

namespace {

// Definite-loss set over graph vertices only: requests already infeasible in
// earlier rounds have no vertex anymore and must not be charged again.
std::vector<RequestRef> graph_losses(const Scenario& s, const CodingGraph& g,
                                     const std::set<std::size_t>& members,
                                     double delay) {
  std::vector<RequestRef> l;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (members.count(i)) continue;
    const Vertex& v = g.vertices[i];
    if (delay + s.packet_size / s.max_rate(v.dest) >
        s.deadline(v.dest, v.packet) + kEps)
      l.push_back({v.dest, v.packet});
  }
  return l;
}

double benefit_sum(const Scenario& s, const std::vector<RequestRef>& reqs) {
  double sum = 0.0;
  for (const auto& [d, p] : reqs) sum += s.benefit(p);
  return sum;
}

}  // namespace

PropagationDecision plan_one_propagation(const Scenario& s,
                                         const CodingGraph& g,
                                         std::vector<RateCandidate>* audit) {
  if (g.empty())
    throw std::invalid_argument("plan_one_propagation needs a nonempty graph");

  const RateLadder ladder = RateLadder::from_scenario(s);
  std::vector<RateCandidate> candidates;
  candidates.reserve(ladder.rates.size());

  for (std::size_t k = 0; k < ladder.rates.size(); ++k) {
    const double threshold = ladder.rates[k];
    RateCandidate cand;
    cand.rate_index = static_cast<int>(k);
    cand.threshold = threshold;
    cand.clique = max_weight_clique(g, [&](const Vertex& v) {
      return s.max_rate(v.dest) + kEps >= threshold;
    });
    cand.eligible = !cand.clique.empty();
    if (cand.eligible) {
      // Actual rate is the slowest member link, at least the threshold.
      double rate = std::numeric_limits<double>::infinity();
      std::set<std::size_t> members(cand.clique.members.begin(),
                                    cand.clique.members.end());
      for (std::size_t idx : cand.clique.members) {
        const Vertex& v = g.vertices[idx];
        rate = std::min(rate, s.max_rate(v.dest));
        cand.f.push_back({v.dest, v.packet});
      }
      std::sort(cand.f.begin(), cand.f.end());
      cand.l = graph_losses(s, g, members, s.packet_size / rate);
    } else {
      // No vertex sustains this rung; score the idle airtime at the rung's
      // own rate so the audit still shows what the rung would cost.
      cand.l = graph_losses(s, g, {}, s.packet_size / threshold);
    }
    cand.u = benefit_sum(s, cand.f) - benefit_sum(s, cand.l);
    candidates.push_back(std::move(cand));
  }

  const RateCandidate* best = nullptr;
  for (const auto& cand : candidates) {
    if (!cand.eligible) continue;
    if (!best) {
      best = &cand;
      continue;
    }
    if (cand.u > best->u + kEps) {
      best = &cand;
    } else if (cand.u >= best->u - kEps) {
      const double closs = benefit_sum(s, cand.l);
      const double bloss = benefit_sum(s, best->l);
      if (closs < bloss - kEps) best = &cand;
      // equal u and loss: keep the lower rung (first seen)
    }
  }
  // The lowest rung admits every vertex, so a nonempty graph always yields at
  // least one eligible candidate.

  PropagationDecision decision;
  decision.clique = best->clique;
  decision.transmission = clique_to_transmission(g, best->clique.members, s);
  decision.u_value = best->u;
  decision.f = best->f;
  decision.l = best->l;
  decision.chosen_rate_index = best->rate_index;
  if (audit) *audit = std::move(candidates);
  return decision;
}

namespace {

void require_valid(const Scenario& s) {
  auto report = validate_scenario(s);
  if (!report.ok())
    throw std::invalid_argument("invalid scenario: " + report.issues.front());
}

// Vertices of g whose request got delivered (this round or earlier).
std::vector<Vertex> delivered_vertices(const CodingGraph& g,
                                       const DeliveryTracker& tracker) {
  std::vector<Vertex> out;
  for (const Vertex& v : g.vertices) {
    if (tracker.is_delivered(v.dest, v.packet)) out.push_back(v);
  }
  return out;
}

}  // namespace

TransmissionLog run_rsnc(const Scenario& s, const RoundObserver& observer) {
  require_valid(s);
  TransmissionLog log;
  log.algorithm = "rsnc";

  Scenario live = s;
  CodingGraph graph = build_graph(live);
  DeliveryTracker tracker;
  double now = 0.0;
  int round = 0;

  while (!graph.empty()) {
    ++round;
    RoundTrace trace;
    PropagationDecision decision = plan_one_propagation(
        live, graph, observer ? &trace.candidates : nullptr);
    const Transmission& tx = decision.transmission;

    now += tx.delay;
    tracker.apply(live, tx, now);

    if (observer) {
      trace.round = round;
      trace.start_time = now - tx.delay;
      trace.graph_vertices = graph.size();
      trace.decision = decision;
      observer(trace);
    }

    std::vector<Vertex> doomed;
    doomed.reserve(decision.l.size());
    for (const auto& [d, p] : decision.l) doomed.push_back({d, p});

    graph = update_graph(graph, live, tx.delay,
                         delivered_vertices(graph, tracker), doomed);
    live = advance_deadlines(live, tx.delay);
    log.transmissions.push_back(tx);
  }

  log.outcomes = tracker.outcomes(s);
  return log;
}

TransmissionLog replay(const Scenario& s,
                       const std::vector<Transmission>& transmissions,
                       const std::string& algorithm_tag) {
  auto report = validate_scenario_structure(s);
  if (!report.ok())
    throw std::invalid_argument("invalid scenario: " + report.issues.front());
  TransmissionLog log;
  log.algorithm = algorithm_tag;
  log.transmissions = transmissions;
  DeliveryTracker tracker;
  double now = 0.0;
  for (const Transmission& tx : transmissions) {
    now += tx.delay;
    tracker.apply(s, tx, now);
  }
  log.outcomes = tracker.outcomes(s);
  return log;
}

}  // namespace rsnc
