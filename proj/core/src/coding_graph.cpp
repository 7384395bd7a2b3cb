#include "rsnc/coding_graph.hpp"

#include <json.hpp>

#include <algorithm>
#include <limits>

namespace rsnc {

namespace {

// Request is still individually meetable: deadline left and the minimum rate
// that meets it is receivable on the destination's own link.
bool rate_feasible(const Scenario& s, DestId d, PacketId p) {
  const double t = s.deadline(d, p);
  if (!(t > 0.0)) return false;
  return s.packet_size / t <= s.max_rate(d) + kEps;
}

// Decodability half of the edge condition: a payload serving both u and w is
// XOR-decodable at both ends. Either the packets coincide, or each side holds
// the other's packet as side information.
bool mutually_decodable(const Scenario& s, const Vertex& u, const Vertex& w) {
  if (u.dest == w.dest) return false;
  if (u.packet == w.packet) return true;
  return s.dest(u.dest).has.count(w.packet) &&
         s.dest(w.dest).has.count(u.packet);
}

// Rate half of the edge condition: each request's minimum rate must be
// receivable by the other destination, otherwise no single rate serves both.
bool mutually_receivable(const Scenario& s, const Vertex& u, const Vertex& w) {
  const double ru = s.packet_size / s.deadline(u.dest, u.packet);
  const double rw = s.packet_size / s.deadline(w.dest, w.packet);
  return ru <= s.max_rate(w.dest) + kEps && rw <= s.max_rate(u.dest) + kEps;
}

CodingGraph assemble(const Scenario& s, const std::vector<Vertex>& vertices,
                     bool rate_aware) {
  CodingGraph g;
  g.vertices = vertices;  // already sorted: built in (dest, packet) order
  g.weights.reserve(vertices.size());
  for (const Vertex& v : vertices) g.weights.push_back(s.benefit(v.packet));
  g.adj.assign(vertices.size(), boost::dynamic_bitset<>(vertices.size()));
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < vertices.size(); ++b) {
      if (!mutually_decodable(s, vertices[a], vertices[b])) continue;
      if (rate_aware && !mutually_receivable(s, vertices[a], vertices[b]))
        continue;
      g.adj[a].set(b);
      g.adj[b].set(a);
    }
  }
  return g;
}

void require_structure(const Scenario& s) {
  auto report = validate_scenario_structure(s);
  if (!report.ok())
    throw std::invalid_argument("invalid scenario: " + report.issues.front());
}

}  // namespace

std::size_t CodingGraph::index_of(const Vertex& v) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
  if (it == vertices.end() || *it != v) return npos;
  return static_cast<std::size_t>(it - vertices.begin());
}

CodingGraph build_graph(const Scenario& s) {
  require_structure(s);
  std::vector<Vertex> vertices;
  for (std::size_t i = 0; i < s.destinations.size(); ++i) {
    const DestId d{static_cast<std::int32_t>(i)};
    for (PacketId p : s.destinations[i].wants) {
      if (rate_feasible(s, d, p)) vertices.push_back({d, p});
    }
  }
  return assemble(s, vertices, /*rate_aware=*/true);
}

CodingGraph build_rate_agnostic_graph(const Scenario& s) {
  require_structure(s);
  std::vector<Vertex> vertices;
  for (std::size_t i = 0; i < s.destinations.size(); ++i) {
    const DestId d{static_cast<std::int32_t>(i)};
    for (PacketId p : s.destinations[i].wants) {
      if (s.deadline(d, p) > 0.0) vertices.push_back({d, p});
    }
  }
  return assemble(s, vertices, /*rate_aware=*/false);
}

Transmission clique_to_transmission(const CodingGraph& g,
                                    const std::vector<std::size_t>& members,
                                    const Scenario& s) {
  if (members.empty())
    throw std::invalid_argument("cannot form a transmission from an empty clique");
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      if (!g.adjacent(members[a], members[b]))
        throw std::invalid_argument("vertex set is not a clique");
    }
  }
  Transmission tx;
  tx.rate = std::numeric_limits<double>::infinity();
  for (std::size_t idx : members) {
    const Vertex& v = g.vertices[idx];
    tx.coded_set.insert(v.packet);
    tx.intended.insert(v.dest);
    tx.rate = std::min(tx.rate, s.max_rate(v.dest));
  }
  tx.delay = s.packet_size / tx.rate;
  return tx;
}

std::optional<PacketId> decodes(const Scenario& s, DestId d,
                                const Transmission& tx) {
  if (!receives(s, d, tx.rate)) return std::nullopt;
  const auto& state = s.dest(d);
  for (PacketId p : tx.coded_set) {
    if (!state.wants.count(p)) continue;
    bool rest_known = true;
    for (PacketId q : tx.coded_set) {
      if (q != p && !state.has.count(q)) {
        rest_known = false;
        break;
      }
    }
    if (rest_known) return p;  // sets are ordered: smallest wins if several
  }
  return std::nullopt;
}

CodingGraph update_graph(const CodingGraph& g, const Scenario& scenario,
                         double elapsed, const std::vector<Vertex>& served,
                         const std::vector<Vertex>& doomed) {
  const Scenario next = advance_deadlines(scenario, elapsed);
  std::set<Vertex> removed(served.begin(), served.end());
  removed.insert(doomed.begin(), doomed.end());

  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Vertex& v = g.vertices[i];
    if (removed.count(v)) continue;
    if (!rate_feasible(next, v.dest, v.packet)) continue;
    keep.push_back(i);
  }

  CodingGraph out;
  out.vertices.reserve(keep.size());
  out.weights.reserve(keep.size());
  for (std::size_t i : keep) {
    out.vertices.push_back(g.vertices[i]);
    out.weights.push_back(g.weights[i]);
  }
  out.adj.assign(keep.size(), boost::dynamic_bitset<>(keep.size()));
  for (std::size_t a = 0; a < keep.size(); ++a) {
    for (std::size_t b = a + 1; b < keep.size(); ++b) {
      if (!g.adjacent(keep[a], keep[b])) continue;
      if (!mutually_receivable(next, out.vertices[a], out.vertices[b]))
        continue;
      out.adj[a].set(b);
      out.adj[b].set(a);
    }
  }
  return out;
}

std::string graph_to_json(const CodingGraph& g) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Vertex& v = g.vertices[i];
    nlohmann::ordered_json entry;
    entry["weight"] = g.weights[i];
    nlohmann::ordered_json nbrs = nlohmann::ordered_json::array();
    for (std::size_t b = g.adj[i].find_first();
         b != boost::dynamic_bitset<>::npos; b = g.adj[i].find_next(b)) {
      const Vertex& w = g.vertices[b];
      nbrs.push_back(std::to_string(w.dest.v) + ":" + std::to_string(w.packet.v));
    }
    entry["neighbors"] = std::move(nbrs);
    j[std::to_string(v.dest.v) + ":" + std::to_string(v.packet.v)] =
        std::move(entry);
  }
  return j.dump(2) + "\n";
}

}  // namespace rsnc
