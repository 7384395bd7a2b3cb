#pragma once

#include <boost/dynamic_bitset.hpp>

#include "rsnc/scenario.hpp"
#include "rsnc/types.hpp"

namespace rsnc {

// One vertex per open request (destination d still wants packet p).
struct Vertex {
  DestId dest;
  PacketId packet;
  auto operator<=>(const Vertex&) const = default;
};

// Undirected vertex-weighted graph over open requests. Two vertices are
// adjacent when one transmission can serve both: distinct destinations,
// XOR-decodable payloads on each side, and each side's minimum required rate
// receivable by the other. Vertices are kept sorted by (dest, packet) so that
// vertex indices give a deterministic canonical order.
struct CodingGraph {
  std::vector<Vertex> vertices;
  std::vector<double> weights;
  std::vector<boost::dynamic_bitset<>> adj;

  std::size_t size() const { return vertices.size(); }
  bool empty() const { return vertices.empty(); }
  bool adjacent(std::size_t a, std::size_t b) const { return adj[a][b]; }
  // Index of v in the canonical order, or npos when absent.
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t index_of(const Vertex& v) const;

  bool operator==(const CodingGraph&) const = default;
};

// Builds the rate-aware coding graph: a vertex exists iff the request's
// minimum required rate is still receivable on its own link, an edge iff the
// two requests are mutually decodable and mutually receivable. Weight of
// (d, p) is the benefit of p. Requests with lapsed deadlines get no vertex.
// Throws std::invalid_argument on structurally invalid scenarios.
CodingGraph build_graph(const Scenario& s);

// Rate-agnostic variant: vertices for every open request with time left,
// edges from decodability alone. Used by coding-oblivious-rate baselines;
// also the supergraph that build_graph always embeds into.
CodingGraph build_rate_agnostic_graph(const Scenario& s);

// XOR payload for a clique: coded set of member packets, intended set of
// member destinations, rate = slowest member link, delay = size / rate.
// Verifies pairwise adjacency; throws std::invalid_argument for non-cliques
// or empty input.
Transmission clique_to_transmission(const CodingGraph& g,
                                    const std::vector<std::size_t>& members,
                                    const Scenario& s);

// The unique wanted packet d can extract from the payload (reception check
// included), or nullopt. If several qualify, the smallest packet id wins;
// with wants and has disjoint this cannot happen for valid scenarios.
std::optional<PacketId> decodes(const Scenario& s, DestId d,
                                const Transmission& tx);

// Advances the graph after a transmission of duration `elapsed`: drops served
// and doomed vertices, drops vertices whose tightened minimum rate exceeds
// their link (or whose deadline lapsed), and re-checks the mutual-rate edge
// condition against the new deadlines. Decodability conditions are time
// invariant, so surviving edges never need their side-information re-checked.
// `scenario` holds the deadlines as they were *before* this elapsed interval.
CodingGraph update_graph(const CodingGraph& g, const Scenario& scenario,
                         double elapsed, const std::vector<Vertex>& served,
                         const std::vector<Vertex>& doomed);

// Adjacency dump keyed "dest:packet", ordered by (dest, packet).
std::string graph_to_json(const CodingGraph& g);

}  // namespace rsnc
