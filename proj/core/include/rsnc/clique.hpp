#pragma once

#include <functional>

#include "rsnc/coding_graph.hpp"

namespace rsnc {

struct CliqueResult {
  std::vector<std::size_t> members;  // vertex indices, ascending
  double weight = 0.0;

  bool empty() const { return members.empty(); }
};

using VertexFilter = std::function<bool(const Vertex&)>;

// Exact maximum-weight clique by branch and bound: candidates are explored in
// degeneracy order and branches whose remaining weight sum cannot beat the
// incumbent are cut. Ties within a 1e-9 weight band are broken toward larger
// cardinality, then toward the lexicographically smallest index sequence, so
// the result is deterministic. An empty graph (or an all-rejecting filter)
// yields the empty clique with weight 0.
CliqueResult max_weight_clique(const CodingGraph& g);
CliqueResult max_weight_clique(const CodingGraph& g, const VertexFilter& keep);

// All nonempty cliques, emitted in lexicographic order of their ascending
// index sequences. Refuses graphs above the cap with LimitError; the output
// can be exponential, so this is a verification tool, not a production path.
std::vector<CliqueResult> enumerate_cliques(const CodingGraph& g,
                                            std::size_t max_vertices = 20);

}  // namespace rsnc
