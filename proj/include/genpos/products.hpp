#pragma once

#include <map>
#include <utility>
#include <vector>

#include "genpos/graph.hpp"

namespace genpos {

/// Coordinates of a product vertex: (base vertex, fibre vertex). Corona
/// base vertices use kBaseFibre as their fibre coordinate.
using Coord = std::pair<int, int>;
inline constexpr int kBaseFibre = -1;

enum class Factor { G, H };

class ProductVertexMap {
 public:
  ProductVertexMap() = default;
  explicit ProductVertexMap(std::vector<Coord> backward);

  int size() const noexcept { return static_cast<int>(backward_.size()); }
  /// Throws InvalidCoordinate.
  Vertex id(Coord c) const;
  Coord coord(Vertex v) const { return backward_.at(v); }

 private:
  std::vector<Coord> backward_;
  std::map<Coord, Vertex> forward_;
};

struct ProductGraph {
  Graph graph;
  ProductVertexMap map;
};

struct RootedSpec {
  Graph base;
  Graph gadget;
  Vertex root = 0;
};

// Vertex ids of the two-factor products are g * n(H) + h.
ProductGraph direct_product(const Graph& g, const Graph& h);
ProductGraph strong_product(const Graph& g, const Graph& h);
ProductGraph lexicographic_product(const Graph& g, const Graph& h);

/// G[H_0, ..., H_{n-1}]: vertex i expands to parts[i]; blocks are laid out
/// in base order. Throws ArityMismatch.
ProductGraph generalized_lexicographic(const Graph& g, const std::vector<Graph>& parts);

/// G ⊙ H with the same H attached to every base vertex. Block i holds the
/// base vertex (i, kBaseFibre) followed by its copy of H.
ProductGraph corona(const Graph& g, const Graph& h);
/// Corona with a possibly different graph attached to each base vertex.
ProductGraph corona(const Graph& g, const std::vector<Graph>& attached);

/// G ∘_v H: copy i of the gadget has its root identified with base vertex i.
/// Ids are i * n(H) + h and the base vertex i is (i, root). Throws
/// DisconnectedGadget, InvalidVertex.
ProductGraph rooted_product(const RootedSpec& spec);

/// Vertices with the other coordinate fixed: Factor::G gives the G-layer
/// through fibre coordinate `fixed`, Factor::H the H-layer through base
/// coordinate `fixed`. Throws InvalidCoordinate when no vertex matches.
VertexSet layer(const ProductVertexMap& map, Factor which, int fixed);

}  // namespace genpos
