#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "genpos/graph.hpp"

namespace genpos {

using Triple = std::array<Vertex, 3>;

/// 3-uniform hypergraph stored as pair completions: for every pair {u,v}
/// the bitset of w such that {u,v,w} is an edge.
class TripleSystem {
 public:
  TripleSystem() = default;
  explicit TripleSystem(int n);

  int order() const noexcept { return n_; }
  std::int64_t size() const noexcept { return count_; }

  /// Idempotent; vertices must be pairwise distinct.
  void add(Vertex a, Vertex b, Vertex c);
  bool contains(Vertex a, Vertex b, Vertex c) const { return completions(a, b).test(c); }
  const Bitset& completions(Vertex a, Vertex b) const { return pair_[static_cast<std::size_t>(a) * n_ + b]; }
  /// Number of edges containing v.
  int degree(Vertex v) const;

  /// Sorted list of edges, each sorted ascending.
  std::vector<Triple> triples() const;

  /// No edge lies entirely inside s.
  bool is_independent(const VertexSet& s) const;

 private:
  int n_ = 0;
  std::int64_t count_ = 0;
  std::vector<Bitset> pair_;
};

struct MisResult {
  int value = 0;
  VertexSet witness;
  std::int64_t nodes_explored = 0;
};

struct MisOptions {
  /// Known independent sets; they only tighten pruning, the witness is
  /// always rediscovered by the search.
  std::vector<VertexSet> seeds;
  /// When set, chosen vertices must be pairwise adjacent in this graph.
  const Graph* compatibility = nullptr;
  /// When set, only sets passing this predicate count as solutions. The
  /// predicate must not be needed for feasibility of subsets.
  std::function<bool(const Bitset&)> accept;
};

/// Exact maximum independent set of a 3-uniform hypergraph. Vertices are
/// branched in increasing id order (include before exclude), so the returned
/// witness is the lexicographically least optimum.
MisResult max_independent_set(const TripleSystem& h, const MisOptions& options = {});

}  // namespace genpos
