#include "genpos/strong_resolving.hpp"

namespace genpos {

bool is_maximally_distant(const Graph& g, const DistMatrix& d, Vertex u, Vertex v) {
  if (!d.reachable(u, v)) throw Error(ErrorCode::DisconnectedGraph, "maximal distance across components");
  const int duv = d(u, v);
  const Bitset& nu = g.neighbors(u);
  for (int w = nu.first(); w >= 0; w = nu.next(w + 1))
    if (d(v, w) > duv) return false;
  return true;
}

bool is_mmd(const Graph& g, const DistMatrix& d, Vertex u, Vertex v) {
  if (u == v) throw Error(ErrorCode::InvalidVertex, "MMD needs two distinct vertices");
  return is_maximally_distant(g, d, u, v) && is_maximally_distant(g, d, v, u);
}

Graph strong_resolving_graph(const Graph& g, const DistMatrix& d) {
  require_connected(g, "strong resolving graph");
  const int n = g.order();
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (is_mmd(g, d, u, v)) b.add_edge(u, v);
  Graph out = std::move(b).build();
  return g.has_labels() ? out.with_labels(g.labels()) : out;
}

Graph strong_resolving_graph(const Graph& g) { return strong_resolving_graph(g, bfs_all_pairs(g)); }

VertexSet simplicial_vertices(const Graph& g) {
  std::vector<Vertex> out;
  for (int u = 0; u < g.order(); ++u) {
    const Bitset& nu = g.neighbors(u);
    bool clique = true;
    for (int w = nu.first(); w >= 0 && clique; w = nu.next(w + 1)) {
      // every other neighbor of u must be adjacent to w
      Bitset rest = nu;
      rest.reset(w);
      clique = rest.is_subset_of(g.neighbors(w));
    }
    if (clique) out.push_back(u);
  }
  return VertexSet(std::move(out));
}

}  // namespace genpos
