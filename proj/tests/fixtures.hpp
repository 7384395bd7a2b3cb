#pragma once

// Shared test fixtures and small numeric helpers.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "rsnc/coding_graph.hpp"
#include "rsnc/scenario.hpp"

namespace rsnc::test {

// Canonical three-destination example, exercised throughout the suite.
// Hand-checked facts:
//   required rates: d0 needs 10000/4 = 2500, d1 and d2 need 10000/8 = 1250
//   graph vertices: (d0,p0), (d1,p1), (d2,p2)
//   single edge (d1,p1)-(d2,p2): 2500 > 2000 blocks d0's pairings
//   best schedule: p0 alone at 5000 (arrives 2s), then p1^p2 at 2000
//   (arrives 7s); every deadline met
//   one three-way XOR at 2000 arrives at 5s: d0 late, two on time
inline Scenario canonical_scenario() {
  Scenario s;
  s.packet_size = 10000.0;
  s.n_packets = 3;
  s.benefits = {1.0, 1.0, 1.0};
  s.destinations.resize(3);

  s.destinations[0].wants = {PacketId{0}};
  s.destinations[0].has = {PacketId{1}, PacketId{2}};
  s.destinations[0].deadlines[PacketId{0}] = 4.0;
  s.destinations[0].max_rate = 5000.0;

  s.destinations[1].wants = {PacketId{1}};
  s.destinations[1].has = {PacketId{0}, PacketId{2}};
  s.destinations[1].deadlines[PacketId{1}] = 8.0;
  s.destinations[1].max_rate = 2000.0;

  s.destinations[2].wants = {PacketId{2}};
  s.destinations[2].has = {PacketId{0}, PacketId{1}};
  s.destinations[2].deadlines[PacketId{2}] = 8.0;
  s.destinations[2].max_rate = 2000.0;
  return s;
}

// Synthetic graph over dummy requests for solver tests: vertex i is (d_i, p_i)
// with the given weight; edges from the pair list.
inline CodingGraph make_graph(const std::vector<double>& weights,
                              const std::vector<std::pair<int, int>>& edges) {
  CodingGraph g;
  const std::size_t n = weights.size();
  for (std::size_t i = 0; i < n; ++i) {
    g.vertices.push_back({DestId{static_cast<std::int32_t>(i)},
                          PacketId{static_cast<std::int32_t>(i)}});
  }
  g.weights = weights;
  g.adj.assign(n, boost::dynamic_bitset<>(n));
  for (auto [a, b] : edges) {
    g.adj[a].set(b);
    g.adj[b].set(a);
  }
  return g;
}

inline bool almost_equal(double a, double b, double eps = 1e-9) {
  return std::fabs(a - b) <= eps;
}

// Spearman rank correlation with average ranks for ties.
inline double spearman(const std::vector<double>& x,
                       const std::vector<double>& y) {
  auto ranks = [](const std::vector<double>& v) {
    const std::size_t n = v.size();
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
    std::vector<double> r(n);
    std::size_t i = 0;
    while (i < n) {
      std::size_t j = i;
      while (j + 1 < n && v[idx[j + 1]] == v[idx[i]]) ++j;
      const double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
      for (std::size_t k = i; k <= j; ++k) r[idx[k]] = avg;
      i = j + 1;
    }
    return r;
  };
  const auto rx = ranks(x);
  const auto ry = ranks(y);
  const double n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += rx[i];
    my += ry[i];
  }
  mx /= n;
  my /= n;
  double cov = 0, vx = 0, vy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    cov += (rx[i] - mx) * (ry[i] - my);
    vx += (rx[i] - mx) * (rx[i] - mx);
    vy += (ry[i] - my) * (ry[i] - my);
  }
  if (vx == 0 || vy == 0) return 0.0;
  return cov / std::sqrt(vx * vy);
}

}  // namespace rsnc::test
