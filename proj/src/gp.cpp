#include "genpos/gp.hpp"

#include <algorithm>
#include <bit>

#include "genpos/strong_resolving.hpp"

namespace genpos {

bool is_general_position_set(const Graph& g, const DistMatrix& d, const VertexSet& s) {
  require_connected(g, "general position test");
  s.validate(g.order());
  const int k = s.size();
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      for (int l = 0; l < k; ++l) {
        if (i == j || j == l || i == l) continue;
        if (d(s[i], s[l]) == d(s[i], s[j]) + d(s[j], s[l])) return false;
      }
  return true;
}

TripleSystem conflict_triples(const Graph& g, const DistMatrix& d) {
  const int n = g.order();
  TripleSystem h(n);
  for (int u = 0; u < n; ++u)
    for (int w = u + 1; w < n; ++w) {
      if (!d.reachable(u, w) || d(u, w) < 2) continue;
      for (int v = 0; v < n; ++v)
        if (v != u && v != w && d.reachable(u, v) && d(u, v) + d(v, w) == d(u, w)) h.add(u, v, w);
    }
  return h;
}

GpResult gp_number(const Graph& g, const DistMatrix& d) {
  require_connected(g, "gp");
  const int n = g.order();
  if (n == 0) return {};
  const TripleSystem h = conflict_triples(g, d);
  MisOptions opt;
  opt.seeds.push_back(clique_number(g).witness);
  const VertexSet sr_clique = clique_number(strong_resolving_graph(g, d)).witness;
  if (h.is_independent(sr_clique)) opt.seeds.push_back(sr_clique);
  const MisResult r = max_independent_set(h, opt);
  return {r.value, r.witness, r.nodes_explored};
}

GpResult gp_number(const Graph& g) { return gp_number(g, bfs_all_pairs(g)); }

GpResult gp_brute_force(const Graph& g, const DistMatrix& d) {
  require_connected(g, "gp");
  const int n = g.order();
  if (n > 24) throw Error(ErrorCode::TooLarge, "brute-force gp limited to 24 vertices");
  GpResult best;
  std::vector<Vertex> members;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    const int size = std::popcount(mask);
    if (size < best.value) continue;
    members.clear();
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1U) members.push_back(v);
    VertexSet s(members);
    if (size == best.value && !(s < best.witness)) continue;
    ++best.nodes_explored;
    if (!is_general_position_set(g, d, s)) continue;
    best.value = size;
    best.witness = std::move(s);
  }
  return best;
}

CliqueResult eta(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return {};
  // three vertices inducing a path: the forbidden pattern of cluster graphs
  TripleSystem p3(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        const int edges = g.adjacent(a, b) + g.adjacent(a, c) + g.adjacent(b, c);
        if (edges == 2) p3.add(a, b, c);
      }
  MisOptions opt;
  opt.accept = [&g](const Bitset& s) {
    for (int u = s.first(); u >= 0; u = s.next(u + 1)) {
      Bitset others = s;
      others.reset(u);
      if (!others.is_subset_of(g.neighbors(u))) return true;
    }
    return false;
  };
  const MisResult r = max_independent_set(p3, opt);
  return {r.value, r.witness, r.nodes_explored};
}

GpResult gp_diameter2(const Graph& g) {
  const DistMatrix d = bfs_all_pairs(g);
  const int diam = diameter(g, d);
  if (diam != 2) throw Error(ErrorCode::WrongDiameter, "expected diameter 2, got " + std::to_string(diam));
  const CliqueResult w = clique_number(g);
  const CliqueResult e = eta(g);
  const std::int64_t nodes = w.nodes_explored + e.nodes_explored;
  if (e.value > w.value || (e.value == w.value && e.witness < w.witness)) return {e.value, e.witness, nodes};
  return {w.value, w.witness, nodes};
}

PartitionCheck check_characterization(const Graph& g, const DistMatrix& d, const VertexSet& s) {
  require_connected(g, "characterization");
  s.validate(g.order());
  PartitionCheck out;
  const Graph sub = induced_subgraph(g, s);
  for (const auto& comp : connected_components(sub)) {
    std::vector<Vertex> orig;
    for (auto v : comp) orig.push_back(s[v]);
    out.parts.emplace_back(std::move(orig));
  }
  out.components_complete =
      std::all_of(out.parts.begin(), out.parts.end(), [&](const VertexSet& p) { return is_clique(g, p); });

  const int p = static_cast<int>(out.parts.size());
  std::vector<std::vector<int>> table(p, std::vector<int>(p, 0));
  out.distance_constant = true;
  for (int i = 0; i < p && out.distance_constant; ++i)
    for (int j = i + 1; j < p && out.distance_constant; ++j) {
      const int ref = d(out.parts[i][0], out.parts[j][0]);
      for (auto u : out.parts[i])
        for (auto v : out.parts[j])
          if (d(u, v) != ref) out.distance_constant = false;
      table[i][j] = table[j][i] = ref;
    }
  if (!out.distance_constant) return out;

  out.in_transitive = true;
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j)
      for (int k = 0; k < p; ++k) {
        if (i == j || j == k || i == k) continue;
        if (table[i][k] == table[i][j] + table[j][k]) out.in_transitive = false;
      }
  out.distance_table = std::move(table);
  return out;
}

std::optional<VertexSet> gp_set_inducing_sr_clique(const Graph& g) {
  const DistMatrix d = bfs_all_pairs(g);
  const GpResult gp = gp_number(g, d);
  const Graph sr = strong_resolving_graph(g, d);
  MisOptions opt;
  opt.compatibility = &sr;
  const MisResult r = max_independent_set(conflict_triples(g, d), opt);
  if (r.value == gp.value) return r.witness;
  return std::nullopt;
}

int isometric_cover_bound(const Graph& g, const std::vector<VertexSet>& cover) {
  const int n = g.order();
  Bitset covered(n);
  for (const auto& part : cover) covered |= part.to_bits(n);
  if (covered.count() != n) throw Error(ErrorCode::NotACover, "cover misses vertices");
  const DistMatrix d = bfs_all_pairs(g);
  int total = 0;
  for (const auto& part : cover) {
    if (!is_isometric_subgraph(g, d, part))
      throw Error(ErrorCode::NotIsometric, "part " + to_string(part) + " is not an isometric subgraph");
    total += gp_number(induced_subgraph(g, part)).value;
  }
  return total;
}

}  // namespace genpos
