#include <random>
#include <map>
#include <set>

#include "genpos/families.hpp"
#include "genpos/gp.hpp"
#include "genpos/strong_resolving.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace genpos;

namespace {

Graph relabel(const Graph& g, std::mt19937_64& rng) {
  std::vector<int> p(g.order());
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  GraphBuilder b(g.order());
  for (auto [u, v] : g.edges()) b.add_edge(p[u], p[v]);
  return std::move(b).build();
}

}  // namespace

TEST_CASE("standard generators") {
  CHECK(family::path(1).size() == 0);
  CHECK(family::path(5).size() == 4);
  CHECK(family::cycle(5).size() == 5);
  CHECK(family::complete(5).size() == 10);
  CHECK(family::edgeless(3).size() == 0);
  CHECK(family::complete_multipartite({3, 2, 1}).size() == 6 + 3 + 2);
  CHECK(family::star(4).degree(0) == 4);
  const Graph p = family::petersen();
  CHECK(p.order() == 10);
  CHECK(p.size() == 15);
  for (int v = 0; v < 10; ++v) CHECK(p.degree(v) == 3);
  CHECK(clique_number(p).value == 2);
  CHECK(are_isomorphic(family::cycle(4), family::complete_bipartite(2, 2)));
  CHECK(family::disjoint_union({family::complete(2), family::path(3)}).size() == 3);
  CHECK_CODE(family::path(0), ErrorCode::InvalidParameter);
  CHECK_CODE(family::cycle(2), ErrorCode::InvalidParameter);
  CHECK_CODE(family::complete_multipartite({2, 0}), ErrorCode::InvalidParameter);
}

TEST_CASE("tree family") {
  const auto spec = family::TreeTSpec::minimal(3);
  const Graph t = family::tree_T(spec);
  CHECK(t.order() == 9);
  CHECK(t.size() == 8);
  CHECK(is_connected(t));
  CHECK(family::tree_T_paths(spec).size() == 3);
  // leaves: two per path
  CHECK(simplicial_vertices(t).size() == 6);

  family::TreeTSpec leaf_target{3, {{3, 1, 0}}};
  CHECK_CODE(family::tree_T(leaf_target), ErrorCode::InvalidSpec);
  family::TreeTSpec leaf_join{3, {{3, 0, 1}}};
  CHECK_CODE(family::tree_T(leaf_join), ErrorCode::InvalidSpec);
  family::TreeTSpec short_path{2, {}};
  CHECK_CODE(family::tree_T(short_path), ErrorCode::InvalidSpec);
  // later steps need a target of degree > 2; vertex 5 is a leaf
  family::TreeTSpec deg2{3, {{3, 1, 1}, {3, 1, 5}}};
  CHECK_CODE(family::tree_T(deg2), ErrorCode::InvalidSpec);
  family::TreeTSpec ok{3, {{3, 1, 1}, {4, 1, 4}}};
  CHECK(family::tree_T(ok).order() == 10);
}

TEST_CASE("realization gadget hits the requested pair") {
  for (int r = 2; r <= 7; ++r)
    for (int t = 2; t <= r; ++t) {
      const Graph g = family::realization_gadget(r, t);
      CHECK(is_connected(g));
      CHECK(gp_number(g).value == r);
      CHECK(clique_number(strong_resolving_graph(g)).value == t);
    }
  CHECK_CODE(family::realization_gadget(1, 1), ErrorCode::InvalidParameter);
  CHECK_CODE(family::realization_gadget(3, 4), ErrorCode::InvalidParameter);
  CHECK_CODE(family::realization_gadget(10, 3), ErrorCode::InvalidParameter);
}

TEST_CASE("rooted clique gadget") {
  const auto gd = family::rooted_clique_gadget(5, 2);
  CHECK(gd.graph.order() == 6);
  CHECK(gd.root == 5);
  CHECK(gd.graph.degree(5) == 2);
  CHECK_CODE(family::rooted_clique_gadget(4, 3), ErrorCode::InvalidParameter);
  CHECK_CODE(family::rooted_clique_gadget(5, 1), ErrorCode::InvalidParameter);
}

TEST_CASE("random generators are deterministic and connected") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph t = family::random_tree(15, seed);
    CHECK(t == family::random_tree(15, seed));
    CHECK(t.size() == 14);
    CHECK(is_connected(t));
    const Graph g = family::random_connected_graph(9, 0.3, seed);
    CHECK(g == family::random_connected_graph(9, 0.3, seed));
    CHECK(is_connected(g));
  }
  CHECK(is_connected(family::random_connected_graph(12, 0.0, 1)));
  CHECK(family::random_tree(1, 0).order() == 1);
}

TEST_CASE("canonical form is a relabeling invariant") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const Graph g = oracle::random_graph(n, 0.4, rng);
    CHECK(canonical_form(g) == canonical_form(relabel(g, rng)));
  }
  CHECK(canonical_form(family::petersen()) == canonical_form(relabel(family::petersen(), rng)));
  CHECK_FALSE(are_isomorphic(family::path(4), family::star(3)));
  CHECK_CODE(canonical_form(Graph(17)), ErrorCode::TooLarge);
}

TEST_CASE("canonical forms separate small non-isomorphic graphs") {
  for (int n = 1; n <= 5; ++n) {
    const int pairs = n * (n - 1) / 2;
    std::map<std::uint32_t, CanonicalForm> by_oracle;
    std::set<CanonicalForm> forms;
    for (std::uint32_t mask = 0; mask < (1U << pairs); ++mask) {
      GraphBuilder b(n);
      int bit = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
          if (mask >> bit & 1U) b.add_edge(i, j);
      const Graph g = std::move(b).build();
      const auto key = oracle::perm_canonical(g);
      const CanonicalForm cf = canonical_form(g);
      auto [it, fresh] = by_oracle.emplace(key, cf);
      if (!fresh) CHECK(it->second == cf);
      forms.insert(cf);
    }
    CHECK(forms.size() == by_oracle.size());
  }
}

TEST_CASE("enumerator counts agree with a permutation oracle") {
  const std::vector<int> expected_counts = {1, 1, 2, 6, 21, 112};
  for (int n = 1; n <= 6; ++n) {
    const auto graphs = enumerate_connected_graphs(n);
    std::set<std::uint32_t> classes;
    const int pairs = n * (n - 1) / 2;
    for (std::uint32_t mask = 0; mask < (1U << pairs); ++mask) {
      GraphBuilder b(n);
      int bit = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
          if (mask >> bit & 1U) b.add_edge(i, j);
      const Graph g = std::move(b).build();
      if (oracle::connected(g)) classes.insert(oracle::perm_canonical(g));
    }
    CHECK(graphs.size() == classes.size());
    CHECK(static_cast<int>(graphs.size()) == expected_counts[n - 1]);
    std::set<std::uint32_t> seen;
    for (const auto& g : graphs) {
      CHECK(is_connected(g));
      CHECK(seen.insert(oracle::perm_canonical(g)).second);
    }
  }
  CHECK_CODE(enumerate_connected_graphs(0), ErrorCode::InvalidParameter);
  CHECK_CODE(enumerate_connected_graphs(7), ErrorCode::InvalidParameter);
}
