#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "genpos/graph.hpp"
#include "genpos/products.hpp"

namespace genpos::family {

// Standard graphs. Paths and cycles are numbered along the path/cycle;
// multipartite parts occupy consecutive id ranges in argument order.
Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph edgeless(int n);
Graph complete_multipartite(const std::vector<int>& parts);
Graph complete_bipartite(int r, int t);
/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
Graph petersen();
Graph star(int leaves);

Graph disjoint_union(const std::vector<Graph>& parts);
/// Cartesian product, used only as a comparison fixture.
Graph cartesian_fixture(const Graph& g, const Graph& h);

/// Trees of the strip family: T_1 is a path, and step i adds a path joined
/// by one edge between one of its inner vertices and a vertex of T_{i-1}
/// (a non-leaf for step 2, a vertex of degree > 2 afterwards).
struct TreeTStep {
  int path_order = 3;
  /// 0-based position of the joining vertex along the new path.
  int path_vertex = 1;
  /// Vertex id in T_{i-1}.
  int target = 0;
};

struct TreeTSpec {
  int first_path_order = 3;
  std::vector<TreeTStep> steps;

  int paths() const { return 1 + static_cast<int>(steps.size()); }
  /// Smallest member with r paths: P_3's whose centres all join vertex 1.
  static TreeTSpec minimal(int r);
};

/// Throws InvalidSpec when a path is too short, the joining vertex is a
/// path end, or the target violates the degree rule.
Graph tree_T(const TreeTSpec& spec);
/// Vertex sets of the constituent paths, in construction order.
std::vector<VertexSet> tree_T_paths(const TreeTSpec& spec);

/// Graph with gp = r and omega(G_SR) = t (r >= t >= 2). A hub z (vertex 0)
/// is tethered to t pieces; piece i is K_{2,m_i} joined to z through one
/// vertex of its 2-side, or a pendant P_2 when m_i = 1, with the m_i as
/// even as possible (this is C_4/P_2 pieces whenever r <= 2t). Needs
/// r <= t^2; for t = 2 and r > 4 the crown K_r x K_2 is returned.
Graph realization_gadget(int r, int t);

struct RootedGadget {
  Graph graph;
  Vertex root = 0;
};

/// K_r on 0..r-1 plus root r adjacent to 0..t-1. Requires 2 <= t <= r-2.
RootedGadget rooted_clique_gadget(int r, int t);

Graph random_tree(int n, std::uint64_t seed);
/// G(n,p) resampled until connected.
Graph random_connected_graph(int n, double p, std::uint64_t seed);

}  // namespace genpos::family

namespace genpos {

struct CanonicalForm {
  std::string certificate;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

inline constexpr int kCanonicalMaxOrder = 16;

/// Isomorphism-invariant certificate: minimum adjacency encoding over the
/// leaves of an individualization-refinement search. Throws TooLarge.
CanonicalForm canonical_form(const Graph& g);

/// Permutation order[i] = original vertex placed at position i of the
/// canonical form.
std::vector<Vertex> canonical_order(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

/// One representative (in canonical labeling) per isomorphism class of
/// connected graphs of order n, sorted by edge count then certificate.
/// Throws InvalidParameter unless 1 <= n <= 6.
std::vector<Graph> enumerate_connected_graphs(int n);

}  // namespace genpos
