#include <random>

#include "genpos/families.hpp"
#include "genpos/products.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace genpos;

TEST_CASE("product orders, ids and labels") {
  const Graph g = family::path(3), h = family::cycle(4);
  const ProductGraph s = strong_product(g, h);
  CHECK(s.graph.order() == 12);
  CHECK(s.map.id({2, 1}) == 9);
  CHECK(s.map.coord(9) == Coord{2, 1});
  CHECK(s.graph.label(9) == "(2,1)");
  CHECK_CODE(s.map.id({3, 0}), ErrorCode::InvalidCoordinate);
  // |E| of the strong product: n_G m_H + n_H m_G + 2 m_G m_H
  CHECK(s.graph.size() == 3 * 4 + 4 * 2 + 2 * 2 * 4);
  CHECK(direct_product(g, h).graph.size() == 2 * 2 * 4);
  CHECK(lexicographic_product(g, h).graph.size() == 3 * 4 + 2 * 16);
}

TEST_CASE("K_2 x K_2 is two disjoint edges") {
  const Graph d = direct_product(family::complete(2), family::complete(2)).graph;
  CHECK(d.size() == 2);
  CHECK_FALSE(is_connected(d));
  CHECK(strong_product(family::complete(2), family::complete(2)).graph == family::complete(4));
}

TEST_CASE("strong product distance is the max of factor distances") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 15; ++trial) {
    const Graph g = oracle::random_connected(2 + static_cast<int>(rng() % 5), 0.4, rng);
    const Graph h = oracle::random_connected(2 + static_cast<int>(rng() % 5), 0.4, rng);
    const ProductGraph p = strong_product(g, h);
    const DistMatrix d = bfs_all_pairs(p.graph);
    const auto dg = oracle::floyd(g), dh = oracle::floyd(h);
    for (int u = 0; u < p.graph.order(); ++u)
      for (int v = 0; v < p.graph.order(); ++v) {
        const auto [a, x] = p.map.coord(u);
        const auto [b, y] = p.map.coord(v);
        CHECK(d(u, v) == std::max(dg[a][b], dh[x][y]));
      }
  }
}

TEST_CASE("lexicographic distances") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 15; ++trial) {
    const Graph g = oracle::random_connected(2 + static_cast<int>(rng() % 5), 0.4, rng);
    const Graph h = oracle::random_graph(1 + static_cast<int>(rng() % 4), 0.4, rng);
    const ProductGraph p = lexicographic_product(g, h);
    const DistMatrix d = bfs_all_pairs(p.graph);
    const auto dg = oracle::floyd(g);
    for (int u = 0; u < p.graph.order(); ++u)
      for (int v = 0; v < p.graph.order(); ++v) {
        const auto [a, x] = p.map.coord(u);
        const auto [b, y] = p.map.coord(v);
        int expected = dg[a][b];
        if (a == b) expected = x == y ? 0 : (h.adjacent(x, y) ? 1 : 2);
        CHECK(d(u, v) == expected);
      }
  }
}

TEST_CASE("generalized lexicographic product") {
  const Graph g = family::path(3);
  const ProductGraph p = generalized_lexicographic(g, {family::complete(2), family::complete(1), family::complete(3)});
  CHECK(p.graph.order() == 6);
  // blocks 0..1, 2, 3..5
  CHECK(p.map.id({2, 2}) == 5);
  CHECK(p.graph.adjacent(0, 1));
  CHECK(p.graph.adjacent(1, 2));
  CHECK_FALSE(p.graph.adjacent(0, 3));
  CHECK(p.graph.size() == 1 + 3 + 2 + 3);
  CHECK_CODE(generalized_lexicographic(g, {family::complete(2)}), ErrorCode::ArityMismatch);
  std::vector<Graph> same(3, family::cycle(4));
  CHECK(generalized_lexicographic(g, same).graph == lexicographic_product(g, family::cycle(4)).graph);
}

TEST_CASE("corona layout") {
  const ProductGraph p = corona(family::path(2), family::complete(2));
  CHECK(p.graph.order() == 6);
  CHECK(p.map.coord(0) == Coord{0, kBaseFibre});
  // each base vertex is followed by its own fibre
  CHECK(p.map.coord(3) == Coord{1, kBaseFibre});
  CHECK(p.map.coord(5) == Coord{1, 1});
  CHECK(p.graph.adjacent(0, 3));
  CHECK(p.graph.adjacent(0, 1));
  CHECK(p.graph.adjacent(1, 2));
  CHECK(p.graph.size() == 1 + 2 * (1 + 2));
  const ProductGraph mixed = corona(family::path(2), {family::complete(1), Graph(2)});
  CHECK(mixed.graph.order() == 5);
  CHECK_CODE(corona(family::path(2), std::vector<Graph>{family::complete(1)}), ErrorCode::ArityMismatch);
}

TEST_CASE("rooted products") {
  const ProductGraph p = rooted_product({family::path(2), family::path(3), 0});
  CHECK(p.graph.order() == 6);
  CHECK(are_isomorphic(p.graph, family::path(6)));
  CHECK(p.map.coord(3) == Coord{1, 0});
  const auto d = bfs_all_pairs(p.graph);
  CHECK(d(0, 3) == 1);
  CHECK_CODE(rooted_product({family::path(2), Graph(2), 0}), ErrorCode::DisconnectedGadget);
  CHECK_CODE(rooted_product({family::path(2), family::path(3), 3}), ErrorCode::InvalidVertex);
}

TEST_CASE("gadget copies are isometric in a rooted product") {
  const auto gd = family::rooted_clique_gadget(5, 2);
  const ProductGraph p = rooted_product({family::cycle(4), gd.graph, gd.root});
  const DistMatrix d = bfs_all_pairs(p.graph);
  for (int i = 0; i < 4; ++i) {
    std::vector<Vertex> copy;
    for (int h = 0; h < gd.graph.order(); ++h) copy.push_back(p.map.id({i, h}));
    CHECK(is_isometric_subgraph(p.graph, d, VertexSet(copy)));
  }
}

TEST_CASE("layers") {
  const ProductGraph p = strong_product(family::path(3), family::path(2));
  CHECK(layer(p.map, Factor::G, 1) == VertexSet{1, 3, 5});
  CHECK(layer(p.map, Factor::H, 2) == VertexSet{4, 5});
  CHECK_CODE(layer(p.map, Factor::H, 3), ErrorCode::InvalidCoordinate);
}

TEST_CASE("products accept disconnected factors") {
  const Graph e = Graph(2);
  CHECK(strong_product(e, family::path(2)).graph.order() == 4);
  CHECK(direct_product(e, e).graph.size() == 0);
}
