#include <cstdlib>
#include <random>

#include "genpos/families.hpp"
#include "genpos/graph.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace genpos;

TEST_CASE("bitset basics") {
  Bitset b(130);
  CHECK(b.none());
  b.set(0);
  b.set(64);
  b.set(129);
  CHECK(b.count() == 3);
  CHECK(b.first() == 0);
  CHECK(b.next(1) == 64);
  CHECK(b.next(65) == 129);
  CHECK(b.next(130) == -1);
  b.reset(64);
  CHECK(b.members() == std::vector<int>{0, 129});
  CHECK(Bitset::full(130).count() == 130);
  Bitset c(130);
  c.set(129);
  CHECK(c.is_subset_of(b));
  CHECK(b.intersection_count(c) == 1);
}

TEST_CASE("vertex sets sort, dedupe and validate") {
  VertexSet s({3, 1, 3, 2});
  CHECK(s.members() == std::vector<Vertex>{1, 2, 3});
  CHECK(s.contains(2));
  CHECK_FALSE(s.contains(0));
  CHECK(to_string(s) == "{1,2,3}");
  CHECK(VertexSet::range(3) == VertexSet{0, 1, 2});
  CHECK_CODE(s.validate(3), ErrorCode::InvalidVertex);
  CHECK_CODE(VertexSet({-1}).validate(3), ErrorCode::InvalidVertex);
  CHECK(VertexSet::from_bits(s.to_bits(5)) == s);
}

TEST_CASE("builder rejects bad edges and collapses repeats") {
  GraphBuilder b(3);
  CHECK_CODE(b.add_edge(0, 3), ErrorCode::InvalidVertex);
  CHECK_CODE(b.add_edge(-1, 0), ErrorCode::InvalidVertex);
  CHECK_CODE(b.add_edge(1, 1), ErrorCode::SelfLoop);
  b.add_edge(0, 1).add_edge(1, 0);
  const Graph g = std::move(b).build();
  CHECK(g.size() == 1);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}});
}

TEST_CASE("bfs agrees with floyd-warshall on random graphs") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 14);
    const Graph g = oracle::random_graph(n, 0.25, rng);
    const DistMatrix d = bfs_all_pairs(g);
    const auto f = oracle::floyd(g);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        if (f[u][v] >= oracle::kInf) CHECK(d(u, v) == DistMatrix::kUnreachable);
        else CHECK(d(u, v) == f[u][v]);
        CHECK(d(u, v) == d(v, u));
      }
    CHECK(is_connected(g) == oracle::connected(g));
    int covered = 0;
    for (const auto& c : connected_components(g)) covered += c.size();
    CHECK(covered == n);
  }
}

TEST_CASE("bfs distances satisfy the triangle inequality and edge steps") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = oracle::random_connected(12, 0.3, rng);
    const DistMatrix d = bfs_all_pairs(g);
    for (int u = 0; u < 12; ++u)
      for (int v = 0; v < 12; ++v) {
        for (int w = 0; w < 12; ++w) CHECK(d(u, w) <= d(u, v) + d(v, w));
        if (g.adjacent(u, v)) CHECK(std::abs(d(0, u) - d(0, v)) <= 1);
      }
  }
}

TEST_CASE("connectivity edge cases") {
  CHECK(is_connected(Graph(0)));
  CHECK(is_connected(Graph(1)));
  CHECK_FALSE(is_connected(Graph(2)));
  CHECK(diameter(Graph(1)) == 0);
  CHECK_CODE(diameter(Graph(2)), ErrorCode::DisconnectedGraph);
  CHECK_CODE(require_connected(Graph(3), "test"), ErrorCode::DisconnectedGraph);
  CHECK(diameter(family::path(6)) == 5);
  CHECK(diameter(family::petersen()) == 2);
}

TEST_CASE("interval matches the distance definition") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = oracle::random_connected(9, 0.3, rng);
    const DistMatrix d = bfs_all_pairs(g);
    const auto f = oracle::floyd(g);
    for (int u = 0; u < 9; ++u)
      for (int v = 0; v < 9; ++v) CHECK(interval(g, d, u, v).members() == oracle::interval(f, u, v));
  }
  const Graph two = Graph(2);
  CHECK_CODE(interval(two, bfs_all_pairs(two), 0, 1), ErrorCode::UnreachablePair);
  const Graph c4 = family::cycle(4);
  CHECK(interval(c4, bfs_all_pairs(c4), 0, 2) == VertexSet{0, 1, 2, 3});
}

TEST_CASE("complement is an involution and partitions the pairs") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const Graph g = oracle::random_graph(n, 0.4, rng);
    const Graph c = complement(g);
    CHECK(complement(c) == g);
    CHECK(g.size() + c.size() == n * (n - 1) / 2);
  }
}

TEST_CASE("induced subgraphs keep original ids as labels") {
  const Graph p = family::path(5);
  const Graph sub = induced_subgraph(p, {1, 2, 4});
  CHECK(sub.order() == 3);
  CHECK(sub.edges() == std::vector<Edge>{{0, 1}});
  CHECK(sub.label(2) == "4");
  CHECK(p.label(3) == "3");
  CHECK(sub.without_labels() == sub);
}

TEST_CASE("isometric subgraphs") {
  const Graph c6 = family::cycle(6);
  const DistMatrix d = bfs_all_pairs(c6);
  CHECK(is_isometric_subgraph(c6, d, {0, 1, 2, 3}));
  CHECK_FALSE(is_isometric_subgraph(c6, d, {0, 1, 2, 3, 4}));
  CHECK_FALSE(is_isometric_subgraph(c6, d, {0, 2}));
}

TEST_CASE("true twins") {
  const Graph k3 = family::complete(3);
  CHECK(are_true_twins(k3, 0, 1));
  const Graph p3 = family::path(3);
  CHECK_FALSE(are_true_twins(p3, 0, 2));
  CHECK_FALSE(are_true_twins(p3, 0, 1));
}
