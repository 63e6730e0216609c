#include "genpos/families.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>

namespace genpos::family {
namespace {

void require(bool ok, ErrorCode code, const std::string& what) {
  if (!ok) throw Error(code, what);
}

}  // namespace

Graph path(int n) {
  require(n >= 1, ErrorCode::InvalidParameter, "path needs n >= 1");
  GraphBuilder b(n);
  for (int i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
  return std::move(b).build();
}

Graph cycle(int n) {
  require(n >= 3, ErrorCode::InvalidParameter, "cycle needs n >= 3");
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
  return std::move(b).build();
}

Graph complete(int n) {
  require(n >= 1, ErrorCode::InvalidParameter, "complete graph needs n >= 1");
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) b.add_edge(i, j);
  return std::move(b).build();
}

Graph edgeless(int n) {
  require(n >= 0, ErrorCode::InvalidParameter, "negative order");
  return Graph(n);
}

Graph complete_multipartite(const std::vector<int>& parts) {
  require(!parts.empty(), ErrorCode::InvalidParameter, "multipartite graph needs a part");
  std::vector<int> part_of;
  for (int i = 0; i < static_cast<int>(parts.size()); ++i) {
    require(parts[i] >= 1, ErrorCode::InvalidParameter, "parts must be non-empty");
    part_of.insert(part_of.end(), parts[i], i);
  }
  const int n = static_cast<int>(part_of.size());
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (part_of[u] != part_of[v]) b.add_edge(u, v);
  return std::move(b).build();
}

Graph complete_bipartite(int r, int t) { return complete_multipartite({r, t}); }

Graph petersen() {
  GraphBuilder b(10);
  for (int i = 0; i < 5; ++i) {
    b.add_edge(i, (i + 1) % 5);
    b.add_edge(5 + i, 5 + (i + 2) % 5);
    b.add_edge(i, i + 5);
  }
  return std::move(b).build();
}

Graph star(int leaves) { return complete_bipartite(1, leaves); }

Graph disjoint_union(const std::vector<Graph>& parts) {
  int n = 0;
  for (const auto& p : parts) n += p.order();
  GraphBuilder b(n);
  int off = 0;
  for (const auto& p : parts) {
    for (auto [u, v] : p.edges()) b.add_edge(off + u, off + v);
    off += p.order();
  }
  return std::move(b).build();
}

Graph cartesian_fixture(const Graph& g, const Graph& h) {
  const int ng = g.order(), nh = h.order();
  GraphBuilder b(ng * nh);
  for (int a = 0; a < ng; ++a)
    for (int x = 0; x < nh; ++x)
      for (int c = 0; c < ng; ++c)
        for (int y = 0; y < nh; ++y)
          if ((a == c && h.adjacent(x, y)) || (x == y && g.adjacent(a, c))) b.add_edge(a * nh + x, c * nh + y);
  return std::move(b).build();
}

TreeTSpec TreeTSpec::minimal(int r) {
  require(r >= 1, ErrorCode::InvalidParameter, "tree family needs r >= 1");
  TreeTSpec s;
  s.first_path_order = 3;
  for (int i = 1; i < r; ++i) s.steps.push_back({3, 1, 1});
  return s;
}

namespace {

struct TreeBuild {
  Graph tree;
  std::vector<VertexSet> paths;
};

TreeBuild build_tree_T(const TreeTSpec& spec) {
  require(spec.first_path_order >= 3, ErrorCode::InvalidSpec, "T_1 must be a path on at least three vertices");
  int n = spec.first_path_order;
  for (const auto& st : spec.steps) n += st.path_order;
  GraphBuilder b(n);
  std::vector<int> degree(n, 0);
  auto join = [&](int u, int v) {
    b.add_edge(u, v);
    ++degree[u];
    ++degree[v];
  };
  std::vector<VertexSet> paths;
  auto add_path = [&](int off, int k) {
    for (int i = 0; i + 1 < k; ++i) join(off + i, off + i + 1);
    std::vector<Vertex> vs(k);
    std::iota(vs.begin(), vs.end(), off);
    paths.emplace_back(std::move(vs));
  };
  add_path(0, spec.first_path_order);
  int off = spec.first_path_order;
  for (std::size_t i = 0; i < spec.steps.size(); ++i) {
    const TreeTStep& st = spec.steps[i];
    const std::string step = "step " + std::to_string(i + 2) + ": ";
    require(st.path_order >= 3, ErrorCode::InvalidSpec, step + "added path needs at least three vertices");
    require(st.path_vertex >= 1 && st.path_vertex <= st.path_order - 2, ErrorCode::InvalidSpec,
            step + "joining vertex of the new path must not be a leaf");
    require(st.target >= 0 && st.target < off, ErrorCode::InvalidSpec, step + "target outside T_{i-1}");
    if (i == 0)
      require(degree[st.target] >= 2, ErrorCode::InvalidSpec, step + "target must not be a leaf of T_1");
    else
      require(degree[st.target] > 2, ErrorCode::InvalidSpec, step + "target must have degree larger than two");
    add_path(off, st.path_order);
    join(off + st.path_vertex, st.target);
    off += st.path_order;
  }
  return {std::move(b).build(), std::move(paths)};
}

}  // namespace

Graph tree_T(const TreeTSpec& spec) { return build_tree_T(spec).tree; }
std::vector<VertexSet> tree_T_paths(const TreeTSpec& spec) { return build_tree_T(spec).paths; }

Graph realization_gadget(int r, int t) {
  require(t >= 2 && r >= t, ErrorCode::InvalidParameter, "realization needs r >= t >= 2");
  if (r > t * t) {
    require(t == 2, ErrorCode::InvalidParameter, "realization construction needs r <= t^2 when t > 2");
    return direct_product(complete(r), complete(2)).graph.without_labels();
  }
  std::vector<int> middle(t, r / t);
  for (int i = 0; i < r % t; ++i) ++middle[i];

  int n = 1;
  for (int m : middle) n += m == 1 ? 2 : m + 2;
  GraphBuilder b(n);
  int next = 1;
  for (int m : middle) {
    const int a = next++;
    b.add_edge(0, a);
    if (m == 1) {
      b.add_edge(a, next++);
      continue;
    }
    const int c = next + m;
    for (int i = 0; i < m; ++i) {
      b.add_edge(a, next + i);
      b.add_edge(next + i, c);
    }
    next = c + 1;
  }
  return std::move(b).build();
}

RootedGadget rooted_clique_gadget(int r, int t) {
  require(t >= 2 && t <= r - 2, ErrorCode::InvalidParameter, "clique gadget needs 2 <= t <= r - 2");
  GraphBuilder b(r + 1);
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) b.add_edge(i, j);
  for (int i = 0; i < t; ++i) b.add_edge(r, i);
  return {std::move(b).build(), r};
}

namespace {

// Portable draws: the standard distributions are implementation-defined,
// so only raw engine output is used.
std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return x % bound;
}

bool coin(std::mt19937_64& rng, double p) { return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p; }

Graph tree_from_rng(int n, std::mt19937_64& rng) {
  if (n <= 2) return path(n);
  // Prüfer decoding
  std::vector<int> code(n - 2), degree(n, 1);
  for (auto& c : code) {
    c = static_cast<int>(below(rng, n));
    ++degree[c];
  }
  GraphBuilder b(n);
  for (int c : code) {
    int leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    b.add_edge(leaf, c);
    --degree[leaf];
    --degree[c];
  }
  int u = -1;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1) {
      if (u < 0) u = v;
      else b.add_edge(u, v);
    }
  return std::move(b).build();
}

}  // namespace

Graph random_tree(int n, std::uint64_t seed) {
  require(n >= 1, ErrorCode::InvalidParameter, "random tree needs n >= 1");
  std::mt19937_64 rng(seed);
  return tree_from_rng(n, rng);
}

Graph random_connected_graph(int n, double p, std::uint64_t seed) {
  require(n >= 1, ErrorCode::InvalidParameter, "random graph needs n >= 1");
  std::mt19937_64 rng(seed);
  constexpr int kAttempts = 10000;
  for (int attempt = 0;; ++attempt) {
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng, p)) b.add_edge(u, v);
    if (attempt == kAttempts) {
      // very sparse p: overlay a random spanning tree instead of sampling forever
      for (auto [u, v] : tree_from_rng(n, rng).edges()) b.add_edge(u, v);
    }
    Graph g = std::move(b).build();
    if (is_connected(g)) return g;
  }
}

}  // namespace genpos::family
