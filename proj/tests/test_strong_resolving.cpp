#include <random>

#include "genpos/families.hpp"
#include "genpos/strong_resolving.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace genpos;

TEST_CASE("path SR graph joins only the two ends") {
  const Graph sr = strong_resolving_graph(family::path(5));
  CHECK(sr.edges() == std::vector<Edge>{{0, 4}});
}

TEST_CASE("even cycles pair antipodes, odd cycles stay cycles") {
  const Graph c6 = strong_resolving_graph(family::cycle(6));
  CHECK(c6.edges() == std::vector<Edge>{{0, 3}, {1, 4}, {2, 5}});
  const Graph c7 = strong_resolving_graph(family::cycle(7));
  CHECK(c7.size() == 7);
  for (int v = 0; v < 7; ++v) CHECK(c7.degree(v) == 2);
}

TEST_CASE("complete graph is its own SR graph") {
  CHECK(strong_resolving_graph(family::complete(5)) == family::complete(5));
}

TEST_CASE("SR graph matches the MMD definition on random graphs") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 10);
    const Graph g = oracle::random_connected(n, 0.35, rng);
    CHECK(strong_resolving_graph(g).edges() == oracle::sr_edges(g));
  }
}

TEST_CASE("twin-free diameter-2 graphs have the complement as SR graph") {
  int seen = 0;
  for (int n = 3; n <= 6; ++n)
    for (const auto& g : enumerate_connected_graphs(n)) {
      if (diameter(g) != 2) continue;
      bool twins = false;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) twins = twins || are_true_twins(g, u, v);
      if (twins) continue;
      ++seen;
      CHECK(strong_resolving_graph(g) == complement(g));
    }
  CHECK(seen > 0);
  CHECK(strong_resolving_graph(family::petersen()) == complement(family::petersen()));
}

TEST_CASE("maximally distant predicates") {
  const Graph p = family::path(4);
  const DistMatrix d = bfs_all_pairs(p);
  CHECK(is_maximally_distant(p, d, 0, 2));
  CHECK_FALSE(is_maximally_distant(p, d, 2, 0));
  CHECK(is_mmd(p, d, 0, 3));
  CHECK_FALSE(is_mmd(p, d, 0, 2));
  CHECK_CODE(is_mmd(p, d, 1, 1), ErrorCode::InvalidVertex);
  const Graph two(2);
  CHECK_CODE(is_maximally_distant(two, bfs_all_pairs(two), 0, 1), ErrorCode::DisconnectedGraph);
  CHECK_CODE(strong_resolving_graph(two), ErrorCode::DisconnectedGraph);
}

TEST_CASE("simplicial vertices of trees are the leaves") {
  const Graph s = family::star(4);
  CHECK(simplicial_vertices(s) == VertexSet{1, 2, 3, 4});
  CHECK(simplicial_vertices(family::complete(3)) == VertexSet{0, 1, 2});
  CHECK(simplicial_vertices(family::cycle(5)).empty());
}

TEST_CASE("SR graph keeps labels") {
  const Graph g = family::path(3).with_labels({"a", "b", "c"});
  CHECK(strong_resolving_graph(g).label(2) == "c");
}
