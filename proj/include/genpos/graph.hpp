#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "genpos/bitset.hpp"
#include "genpos/error.hpp"

namespace genpos {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Strictly increasing list of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  /// Sorts and drops duplicates.
  explicit VertexSet(std::vector<Vertex> members);
  VertexSet(std::initializer_list<Vertex> members) : VertexSet(std::vector<Vertex>(members)) {}
  static VertexSet from_bits(const Bitset& bits) { return VertexSet(bits.members(), Sorted{}); }
  static VertexSet range(int n);

  int size() const noexcept { return static_cast<int>(members_.size()); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(Vertex v) const;
  Vertex operator[](int i) const { return members_[i]; }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }
  const std::vector<Vertex>& members() const noexcept { return members_; }

  Bitset to_bits(int n) const;
  /// Throws InvalidVertex unless every member is in 0..n-1.
  void validate(int n) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet& a, const VertexSet& b) { return a.members_ <=> b.members_; }

 private:
  struct Sorted {};
  VertexSet(std::vector<Vertex> sorted, Sorted) : members_(std::move(sorted)) {}
  std::vector<Vertex> members_;
};

std::string to_string(const VertexSet& s);

/// Simple undirected graph on vertices 0..n-1 with per-vertex adjacency
/// bitsets. Immutable once built; use GraphBuilder to construct one.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph of order n.
  explicit Graph(int n);

  int order() const noexcept { return n_; }
  int size() const noexcept { return m_; }
  bool adjacent(Vertex u, Vertex v) const { return adj_[u].test(v); }
  const Bitset& neighbors(Vertex u) const { return adj_[u]; }
  Bitset closed_neighbors(Vertex u) const;
  int degree(Vertex u) const { return adj_[u].count(); }
  std::vector<Edge> edges() const;

  bool has_labels() const noexcept { return !labels_.empty(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  /// Label of v, or its id when the graph is unlabeled.
  std::string label(Vertex v) const;
  Graph with_labels(std::vector<std::string> labels) const;
  Graph without_labels() const;

  /// Structural equality: same order and same edge set. Labels are ignored.
  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

 private:
  friend class GraphBuilder;
  int n_ = 0;
  int m_ = 0;
  std::vector<Bitset> adj_;
  std::vector<std::string> labels_;
};

class GraphBuilder {
 public:
  explicit GraphBuilder(int n);

  int order() const noexcept { return graph_.n_; }
  /// Throws InvalidVertex for out-of-range ids and SelfLoop for u == v.
  /// Adding an existing edge is a no-op.
  GraphBuilder& add_edge(Vertex u, Vertex v);
  GraphBuilder& add_edges(std::span<const Edge> edges);
  GraphBuilder& set_label(Vertex v, std::string label);
  bool has_edge(Vertex u, Vertex v) const { return graph_.adj_[u].test(v); }

  Graph build() &&;
  Graph build() const&;

 private:
  Graph graph_;
};

Graph make_graph(int n, std::span<const Edge> edges);
inline Graph make_graph(int n, std::initializer_list<Edge> edges) {
  return make_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

/// All-pairs unweighted distances. Unreachable pairs hold kUnreachable.
class DistMatrix {
 public:
  static constexpr int kUnreachable = -1;

  DistMatrix() = default;
  explicit DistMatrix(int n) : n_(n), d_(static_cast<std::size_t>(n) * n, kUnreachable) {}

  int order() const noexcept { return n_; }
  int operator()(Vertex u, Vertex v) const { return d_[static_cast<std::size_t>(u) * n_ + v]; }
  int& at(Vertex u, Vertex v) { return d_[static_cast<std::size_t>(u) * n_ + v]; }
  bool reachable(Vertex u, Vertex v) const { return (*this)(u, v) != kUnreachable; }
  /// Row of distances from u.
  std::span<const int> row(Vertex u) const { return {d_.data() + static_cast<std::size_t>(u) * n_, static_cast<std::size_t>(n_)}; }

  friend bool operator==(const DistMatrix&, const DistMatrix&) = default;

 private:
  int n_ = 0;
  std::vector<int> d_;
};

DistMatrix bfs_all_pairs(const Graph& g);

/// The empty graph and K_1 count as connected.
bool is_connected(const Graph& g);

std::vector<VertexSet> connected_components(const Graph& g);

/// Throws DisconnectedGraph.
int diameter(const Graph& g, const DistMatrix& d);
int diameter(const Graph& g);

/// Vertices on some u,v-geodesic, endpoints included. Throws UnreachablePair.
VertexSet interval(const Graph& g, const DistMatrix& d, Vertex u, Vertex v);

Graph complement(const Graph& g);

/// Subgraph induced by s, relabeled to 0..|s|-1 in increasing order of the
/// original ids. Labels of the result hold the original ids.
Graph induced_subgraph(const Graph& g, const VertexSet& s);

/// True iff <s> is connected and preserves every pairwise distance of g.
bool is_isometric_subgraph(const Graph& g, const DistMatrix& d, const VertexSet& s);

/// N[u] == N[v]. Implies adjacency when u != v.
bool are_true_twins(const Graph& g, Vertex u, Vertex v);

/// Throws DisconnectedGraph unless g is connected.
void require_connected(const Graph& g, const char* what);

}  // namespace genpos
