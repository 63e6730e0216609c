#pragma once

#include "genpos/graph.hpp"

namespace genpos {

/// u is maximally distant from v: no neighbor of u is strictly farther from v.
/// Throws DisconnectedGraph if u and v are not in the same component.
bool is_maximally_distant(const Graph& g, const DistMatrix& d, Vertex u, Vertex v);

/// Mutually maximally distant. Requires u != v.
bool is_mmd(const Graph& g, const DistMatrix& d, Vertex u, Vertex v);

/// Graph on V(g) whose edges are the MMD pairs of g. Throws DisconnectedGraph.
Graph strong_resolving_graph(const Graph& g, const DistMatrix& d);
Graph strong_resolving_graph(const Graph& g);

/// Vertices whose open neighborhood is a clique.
VertexSet simplicial_vertices(const Graph& g);

}  // namespace genpos
