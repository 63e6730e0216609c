#include "genpos/products.hpp"

namespace genpos {

ProductVertexMap::ProductVertexMap(std::vector<Coord> backward) : backward_(std::move(backward)) {
  for (int v = 0; v < size(); ++v) forward_.emplace(backward_[v], v);
}

Vertex ProductVertexMap::id(Coord c) const {
  auto it = forward_.find(c);
  if (it == forward_.end())
    throw Error(ErrorCode::InvalidCoordinate, "(" + std::to_string(c.first) + "," + std::to_string(c.second) + ")");
  return it->second;
}

namespace {

std::string pair_label(const Graph& g, Vertex a, const Graph& h, Vertex b) {
  return "(" + g.label(a) + "," + h.label(b) + ")";
}

template <typename AdjacentFn>
ProductGraph grid_product(const Graph& g, const Graph& h, AdjacentFn&& adjacent) {
  const int ng = g.order(), nh = h.order();
  std::vector<Coord> coords;
  coords.reserve(static_cast<std::size_t>(ng) * nh);
  GraphBuilder b(ng * nh);
  for (int a = 0; a < ng; ++a)
    for (int x = 0; x < nh; ++x) {
      coords.emplace_back(a, x);
      b.set_label(a * nh + x, pair_label(g, a, h, x));
    }
  for (int u = 0; u < ng * nh; ++u)
    for (int v = u + 1; v < ng * nh; ++v)
      if (adjacent(u / nh, u % nh, v / nh, v % nh)) b.add_edge(u, v);
  return {std::move(b).build(), ProductVertexMap(std::move(coords))};
}

}  // namespace

ProductGraph direct_product(const Graph& g, const Graph& h) {
  return grid_product(g, h, [&](int a, int x, int c, int y) { return g.adjacent(a, c) && h.adjacent(x, y); });
}

ProductGraph strong_product(const Graph& g, const Graph& h) {
  return grid_product(g, h, [&](int a, int x, int c, int y) {
    const bool ga = a == c || g.adjacent(a, c);
    const bool hx = x == y || h.adjacent(x, y);
    return ga && hx;
  });
}

ProductGraph lexicographic_product(const Graph& g, const Graph& h) {
  return grid_product(g, h, [&](int a, int x, int c, int y) { return g.adjacent(a, c) || (a == c && h.adjacent(x, y)); });
}

ProductGraph generalized_lexicographic(const Graph& g, const std::vector<Graph>& parts) {
  const int n = g.order();
  if (static_cast<int>(parts.size()) != n)
    throw Error(ErrorCode::ArityMismatch, std::to_string(parts.size()) + " parts for a base of order " + std::to_string(n));
  std::vector<int> offset(n + 1, 0);
  for (int i = 0; i < n; ++i) offset[i + 1] = offset[i] + parts[i].order();
  std::vector<Coord> coords;
  GraphBuilder b(offset[n]);
  for (int i = 0; i < n; ++i)
    for (int x = 0; x < parts[i].order(); ++x) {
      coords.emplace_back(i, x);
      b.set_label(offset[i] + x, pair_label(g, i, parts[i], x));
    }
  for (int i = 0; i < n; ++i) {
    for (auto [x, y] : parts[i].edges()) b.add_edge(offset[i] + x, offset[i] + y);
    for (int j = i + 1; j < n; ++j) {
      if (!g.adjacent(i, j)) continue;
      for (int u = offset[i]; u < offset[i + 1]; ++u)
        for (int v = offset[j]; v < offset[j + 1]; ++v) b.add_edge(u, v);
    }
  }
  return {std::move(b).build(), ProductVertexMap(std::move(coords))};
}

ProductGraph corona(const Graph& g, const std::vector<Graph>& attached) {
  const int n = g.order();
  if (static_cast<int>(attached.size()) != n)
    throw Error(ErrorCode::ArityMismatch, std::to_string(attached.size()) + " attachments for a base of order " + std::to_string(n));
  std::vector<int> offset(n + 1, 0);
  for (int i = 0; i < n; ++i) offset[i + 1] = offset[i] + 1 + attached[i].order();
  std::vector<Coord> coords;
  GraphBuilder b(offset[n]);
  for (int i = 0; i < n; ++i) {
    coords.emplace_back(i, kBaseFibre);
    b.set_label(offset[i], g.label(i));
    const Graph& h = attached[i];
    for (int x = 0; x < h.order(); ++x) {
      coords.emplace_back(i, x);
      b.set_label(offset[i] + 1 + x, pair_label(g, i, h, x));
      b.add_edge(offset[i], offset[i] + 1 + x);
    }
    for (auto [x, y] : h.edges()) b.add_edge(offset[i] + 1 + x, offset[i] + 1 + y);
  }
  for (auto [i, j] : g.edges()) b.add_edge(offset[i], offset[j]);
  return {std::move(b).build(), ProductVertexMap(std::move(coords))};
}

ProductGraph corona(const Graph& g, const Graph& h) { return corona(g, std::vector<Graph>(g.order(), h)); }

ProductGraph rooted_product(const RootedSpec& spec) {
  const Graph& g = spec.base;
  const Graph& h = spec.gadget;
  if (spec.root < 0 || spec.root >= h.order()) throw Error(ErrorCode::InvalidVertex, "root outside the gadget");
  if (!is_connected(h)) throw Error(ErrorCode::DisconnectedGadget, "rooted product gadget must be connected");
  const int ng = g.order(), nh = h.order();
  std::vector<Coord> coords;
  GraphBuilder b(ng * nh);
  for (int i = 0; i < ng; ++i)
    for (int x = 0; x < nh; ++x) {
      coords.emplace_back(i, x);
      b.set_label(i * nh + x, x == spec.root ? g.label(i) : pair_label(g, i, h, x));
    }
  for (int i = 0; i < ng; ++i)
    for (auto [x, y] : h.edges()) b.add_edge(i * nh + x, i * nh + y);
  for (auto [i, j] : g.edges()) b.add_edge(i * nh + spec.root, j * nh + spec.root);
  return {std::move(b).build(), ProductVertexMap(std::move(coords))};
}

VertexSet layer(const ProductVertexMap& map, Factor which, int fixed) {
  std::vector<Vertex> out;
  for (int v = 0; v < map.size(); ++v) {
    const Coord c = map.coord(v);
    if ((which == Factor::G ? c.second : c.first) == fixed) out.push_back(v);
  }
  if (out.empty()) throw Error(ErrorCode::InvalidCoordinate, "no layer at coordinate " + std::to_string(fixed));
  return VertexSet(std::move(out));
}

}  // namespace genpos
