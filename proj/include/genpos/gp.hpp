#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "genpos/clique.hpp"
#include "genpos/graph.hpp"
#include "genpos/hypergraph_mis.hpp"

namespace genpos {

/// Maximum general position set. `witness` is the lexicographically least
/// set among all optima.
struct GpResult {
  int value = 0;
  VertexSet witness;
  std::int64_t nodes_explored = 0;
};

/// Decomposition of <S> into components together with the verdicts of the
/// component/partition characterization of general position sets.
struct PartitionCheck {
  std::vector<VertexSet> parts;
  /// distance_table[i][j] = d(S_i, S_j); only present when distance-constant.
  std::optional<std::vector<std::vector<int>>> distance_table;
  bool components_complete = false;
  bool distance_constant = false;
  bool in_transitive = false;
  bool verdict() const { return components_complete && distance_constant && in_transitive; }
};

/// No three distinct members lie on a common geodesic. Throws DisconnectedGraph.
bool is_general_position_set(const Graph& g, const DistMatrix& d, const VertexSet& s);

/// All 3-subsets {u,v,w} in which one member lies on a geodesic between the
/// other two. Pairs in different components never form a triple.
TripleSystem conflict_triples(const Graph& g, const DistMatrix& d);

/// Exact gp(G). Seeds the search with a maximum clique of g and of G_SR.
/// Throws DisconnectedGraph.
GpResult gp_number(const Graph& g, const DistMatrix& d);
GpResult gp_number(const Graph& g);

/// Exhaustive reference: scans every subset in order of decreasing size.
/// Exponential in n; intended for cross-checking on small graphs.
GpResult gp_brute_force(const Graph& g, const DistMatrix& d);

/// Largest S such that <S> in the complement is complete multipartite with
/// at least two parts (equivalently: <S> in g is a disjoint union of at
/// least two cliques). Value 0 if no such S exists.
CliqueResult eta(const Graph& g);

/// max{omega(g), eta(g)}; throws WrongDiameter unless diam(g) == 2.
GpResult gp_diameter2(const Graph& g);

PartitionCheck check_characterization(const Graph& g, const DistMatrix& d, const VertexSet& s);

/// A maximum general position set whose members are pairwise MMD, if one of
/// size gp(g) exists.
std::optional<VertexSet> gp_set_inducing_sr_clique(const Graph& g);

/// Sum of gp over the parts of an isometric cover. Throws NotACover when the
/// parts miss a vertex and NotIsometric when a part is not an isometric
/// (connected) subgraph.
int isometric_cover_bound(const Graph& g, const std::vector<VertexSet>& cover);

}  // namespace genpos
