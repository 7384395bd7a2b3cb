#include "rsnc/clique.hpp"

#include <algorithm>
#include <numeric>

namespace rsnc {

namespace {

using Bitset = boost::dynamic_bitset<>;

// true when candidate (wa, a) should replace incumbent (wb, b)
bool clique_better(double wa, const std::vector<std::size_t>& a, double wb,
                   const std::vector<std::size_t>& b) {
  if (wa > wb + kEps) return true;
  if (wa < wb - kEps) return false;
  if (a.size() != b.size()) return a.size() > b.size();
  return a < b;
}

// Smallest-last (degeneracy) order over the filtered subgraph: repeatedly
// peel the minimum-degree vertex. Exploring candidates in this order keeps
// branching shallow on sparse graphs.
std::vector<std::size_t> degeneracy_order(const std::vector<std::size_t>& ids,
                                          const std::vector<Bitset>& local_adj) {
  const std::size_t n = ids.size();
  std::vector<std::size_t> degree(n);
  Bitset alive(n);
  alive.set();
  for (std::size_t i = 0; i < n; ++i) degree[i] = local_adj[i].count();

  std::vector<std::size_t> order;
  order.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = Bitset::npos;
    for (std::size_t i = alive.find_first(); i != Bitset::npos;
         i = alive.find_next(i)) {
      if (best == Bitset::npos || degree[i] < degree[best]) best = i;
    }
    order.push_back(best);
    alive.reset(best);
    for (std::size_t i = alive.find_first(); i != Bitset::npos;
         i = alive.find_next(i)) {
      if (local_adj[best][i]) --degree[i];
    }
  }
  std::reverse(order.begin(), order.end());
  return order;
}

struct Searcher {
  const std::vector<std::size_t>& ids;      // local -> global vertex index
  const std::vector<double>& local_weight;  // by local index
  const std::vector<Bitset>& local_adj;
  const std::vector<std::size_t>& rank_to_local;

  double best_weight = 0.0;
  std::vector<std::size_t> best_members;  // global ids, ascending
  std::vector<std::size_t> current;       // global ids, unsorted

  void challenge(double weight) {
    std::vector<std::size_t> sorted = current;
    std::sort(sorted.begin(), sorted.end());
    if (clique_better(weight, sorted, best_weight, best_members)) {
      best_weight = weight;
      best_members = std::move(sorted);
    }
  }

  void expand(Bitset cand, double weight) {
    challenge(weight);
    double remaining = 0.0;
    for (std::size_t i = cand.find_first(); i != Bitset::npos;
         i = cand.find_next(i))
      remaining += local_weight[i];
    for (std::size_t rank = 0; rank < rank_to_local.size(); ++rank) {
      const std::size_t v = rank_to_local[rank];
      if (!cand[v]) continue;
      // Everything still selectable (v included) cannot beat the incumbent:
      // equal-weight ties must survive for the cardinality/lex tie-break.
      if (weight + remaining < best_weight - kEps) return;
      cand.reset(v);
      current.push_back(ids[v]);
      expand(cand & local_adj[v], weight + local_weight[v]);
      current.pop_back();
      remaining -= local_weight[v];
    }
  }
};

}  // namespace

CliqueResult max_weight_clique(const CodingGraph& g) {
  return max_weight_clique(g, VertexFilter{});
}

CliqueResult max_weight_clique(const CodingGraph& g, const VertexFilter& keep) {
  std::vector<std::size_t> ids;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!keep || keep(g.vertices[i])) ids.push_back(i);
  }
  const std::size_t n = ids.size();
  if (n == 0) return {};

  std::vector<double> local_weight(n);
  std::vector<Bitset> local_adj(n, Bitset(n));
  for (std::size_t a = 0; a < n; ++a) {
    local_weight[a] = g.weights[ids[a]];
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && g.adjacent(ids[a], ids[b])) local_adj[a].set(b);
    }
  }
  const std::vector<std::size_t> rank_to_local = degeneracy_order(ids, local_adj);

  Searcher search{ids, local_weight, local_adj, rank_to_local};
  Bitset all(n);
  all.set();
  search.expand(all, 0.0);

  CliqueResult out;
  out.members = std::move(search.best_members);
  for (std::size_t idx : out.members) out.weight += g.weights[idx];
  return out;
}

std::vector<CliqueResult> enumerate_cliques(const CodingGraph& g,
                                            std::size_t max_vertices) {
  if (g.size() > max_vertices)
    throw LimitError("clique enumeration refused: graph has " +
                     std::to_string(g.size()) + " vertices, cap is " +
                     std::to_string(max_vertices));
  std::vector<CliqueResult> out;
  std::vector<std::size_t> current;

  // Depth-first extension by ascending index yields lexicographic order.
  auto extend = [&](auto&& self, std::size_t next_min, const Bitset& cand,
                    double weight) -> void {
    for (std::size_t v = next_min; v < g.size(); ++v) {
      if (!cand[v]) continue;
      current.push_back(v);
      out.push_back({current, weight + g.weights[v]});
      self(self, v + 1, cand & g.adj[v], weight + g.weights[v]);
      current.pop_back();
    }
  };
  Bitset all(g.size());
  all.set();
  extend(extend, 0, all, 0.0);
  return out;
}

}  // namespace rsnc
