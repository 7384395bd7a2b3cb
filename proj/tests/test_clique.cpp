#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "rsnc/clique.hpp"

using namespace rsnc;
using test::make_graph;

namespace {

// reference answer by exhaustive enumeration, mirroring the solver's
// tie-breaking: weight, then size, then lexicographically smallest index list
CliqueResult best_by_enumeration(const CodingGraph& g) {
  CliqueResult best;
  for (const CliqueResult& c : enumerate_cliques(g)) {
    const bool better =
        c.weight > best.weight + 1e-9 ||
        (c.weight > best.weight - 1e-9 &&
         (c.members.size() > best.members.size() ||
          (c.members.size() == best.members.size() &&
           c.members < best.members)));
    if (better) best = c;
  }
  return best;
}

}  // namespace

TEST_CASE("solver on hand-built graphs") {
  SUBCASE("empty graph") {
    CodingGraph g;
    const auto r = max_weight_clique(g);
    CHECK(r.members.empty());
    CHECK(r.weight == 0.0);
  }
  SUBCASE("isolated vertices pick the heaviest one") {
    const auto g = make_graph({1.0, 3.0, 2.0}, {});
    const auto r = max_weight_clique(g);
    CHECK(r.members == std::vector<std::size_t>{1});
    CHECK(r.weight == doctest::Approx(3.0));
  }
  SUBCASE("triangle beats any heavy single vertex of lower total") {
    const auto g = make_graph({1.0, 1.0, 1.0, 2.5}, {{0, 1}, {1, 2}, {0, 2}});
    const auto r = max_weight_clique(g);
    CHECK(r.members == std::vector<std::size_t>{0, 1, 2});
    CHECK(r.weight == doctest::Approx(3.0));
  }
  SUBCASE("weight ties resolve towards more members") {
    // edge {0,1} at 1+1 ties the lone vertex {2} at 2
    const auto g = make_graph({1.0, 1.0, 2.0}, {{0, 1}});
    const auto r = max_weight_clique(g);
    CHECK(r.members == std::vector<std::size_t>{0, 1});
  }
  SUBCASE("full ties resolve lexicographically") {
    const auto g = make_graph({1.0, 1.0, 1.0, 1.0}, {{0, 3}, {1, 2}});
    const auto r = max_weight_clique(g);
    CHECK(r.members == std::vector<std::size_t>{0, 3});
  }
}

TEST_CASE("vertex filter restricts the search") {
  const auto g = make_graph({1.0, 1.0, 5.0}, {{0, 1}});
  const auto r = max_weight_clique(
      g, [](const Vertex& v) { return v.dest.v != 2; });
  CHECK(r.members == std::vector<std::size_t>{0, 1});

  const auto none = max_weight_clique(g, [](const Vertex&) { return false; });
  CHECK(none.members.empty());
}

TEST_CASE("solver agrees with enumeration on random graphs") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 12;
    const double p = 0.15 + 0.7 * static_cast<double>(rng() % 100) / 100.0;
    std::vector<double> w(n);
    for (auto& x : w) x = 0.25 * static_cast<double>(1 + rng() % 16);
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (static_cast<double>(rng() % 1000) / 1000.0 < p)
          edges.push_back({static_cast<int>(i), static_cast<int>(j)});
    const auto g = make_graph(w, edges);
    const auto fast = max_weight_clique(g);
    const auto slow = best_by_enumeration(g);
    REQUIRE(fast.weight == doctest::Approx(slow.weight));
    REQUIRE(fast.members == slow.members);
  }
}

TEST_CASE("enumeration order is lexicographic and complete") {
  const auto g = make_graph({1, 1, 1}, {{0, 1}, {1, 2}, {0, 2}});
  std::vector<std::vector<std::size_t>> seen;
  for (const CliqueResult& c : enumerate_cliques(g)) seen.push_back(c.members);
  const std::vector<std::vector<std::size_t>> expected = {
      {0}, {0, 1}, {0, 1, 2}, {0, 2}, {1}, {1, 2}, {2}};
  CHECK(seen == expected);
}

TEST_CASE("enumeration refuses oversized graphs") {
  std::vector<double> w(21, 1.0);
  const auto g = make_graph(w, {});
  CHECK_THROWS_AS(enumerate_cliques(g), LimitError);
  CHECK_NOTHROW(enumerate_cliques(g, 25));
}
