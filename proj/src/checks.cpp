#include "genpos/checks.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <thread>

#include "genpos/explorer.hpp"
#include "genpos/families.hpp"
#include "genpos/gp.hpp"
#include "genpos/io.hpp"
#include "genpos/products.hpp"
#include "genpos/strong_resolving.hpp"

namespace genpos {
namespace {

using family::complete;
using family::cycle;
using family::path;

int gp(const Graph& g) { return gp_number(g).value; }
int omega_sr(const Graph& g) { return clique_number(strong_resolving_graph(g)).value; }

std::vector<Graph> connected_up_to(int n) {
  std::vector<Graph> out;
  for (int k = 1; k <= std::min(n, 6); ++k)
    for (auto& g : enumerate_connected_graphs(k)) out.push_back(std::move(g));
  return out;
}

std::string g6(const Graph& g) { return emit_graph6(g); }

int pick(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

struct Tally {
  explicit Tally(bool detail_all) : detail_all(detail_all) {}

  void add(std::string label, Json expected, Json computed, bool ok) {
    ++total;
    if (ok) ++passed;
    if (detail_all || !ok) shown.push_back({std::move(label), std::move(expected), std::move(computed), ok});
  }
  void add(std::string label, Json expected, Json computed) {
    const bool ok = expected == computed;
    add(std::move(label), std::move(expected), std::move(computed), ok);
  }

  // named instances stay visible even in failure-only tallies
  void add_shown(std::string label, Json expected, Json computed) {
    const bool saved = detail_all;
    detail_all = true;
    add(std::move(label), std::move(expected), std::move(computed));
    detail_all = saved;
  }

  bool detail_all;
  int total = 0;
  int passed = 0;
  int skipped = 0;
  std::vector<InstanceResult> shown;
};

CheckReport finish(Tally& t, Json params) {
  CheckReport r;
  params["instances"] = t.total;
  if (t.skipped) params["skipped_over_budget"] = t.skipped;
  r.params = std::move(params);
  r.expected = t.total;
  r.computed = t.passed;
  r.pass = t.total == t.passed;
  r.instances = std::move(t.shown);
  return r;
}

bool over(const Budget& b, int product_n) { return product_n > b.max_product_n; }

// ---------------------------------------------------------------------------

CheckReport lower_bound(const Budget& b) {
  Tally t(false);
  for (const auto& g : connected_up_to(b.exhaustive_n)) {
    const int v = gp(g), w = omega_sr(g);
    t.add(g6(g), "gp >= omega_sr", Json{{"gp", v}, {"omega_sr", w}}, v >= w);
  }
  return finish(t, {{"max_n", std::min(b.exhaustive_n, 6)}});
}

CheckReport equality_condition(const Budget& b) {
  Tally t(false);
  for (const auto& g : connected_up_to(b.exhaustive_n)) {
    const DistMatrix d = bfs_all_pairs(g);
    const int v = gp_number(g, d).value;
    const bool equal = v == omega_sr(g);
    bool has_set = false;
    if (auto s = gp_set_inducing_sr_clique(g))
      has_set = s->size() == v && is_general_position_set(g, d, *s) && is_clique(strong_resolving_graph(g, d), *s);
    t.add(g6(g), Json{{"sr_clique_gp_set", equal}}, Json{{"sr_clique_gp_set", has_set}});
  }
  return finish(t, {{"max_n", std::min(b.exhaustive_n, 6)}});
}

std::vector<VertexSet> strip_cover(const ProductVertexMap& map, const std::vector<VertexSet>& strips, int n_g) {
  std::vector<VertexSet> out;
  for (const auto& strip : strips) {
    std::vector<Vertex> vs;
    for (int g = 0; g < n_g; ++g)
      for (auto h : strip) vs.push_back(map.id({g, h}));
    out.emplace_back(std::move(vs));
  }
  return out;
}

std::vector<VertexSet> fibre_cover(const ProductGraph& p, int n_g) {
  std::vector<VertexSet> out;
  for (int g = 0; g < n_g; ++g) out.push_back(layer(p.map, Factor::H, g));
  return out;
}

CheckReport isometric_cover(const Budget& b) {
  Tally t(true);
  auto run = [&](const std::string& label, const Graph& g, const std::vector<VertexSet>& cover) {
    const int bound = isometric_cover_bound(g, cover), v = gp(g);
    t.add(label, "gp <= sum of gp over the cover", Json{{"gp", v}, {"bound", bound}}, v <= bound);
  };
  for (int r = 2; r <= 4; ++r)
    for (int n = 2; n <= 5; ++n) {
      const auto p = strong_product(path(r), path(n));
      run("P_" + std::to_string(r) + " x P_" + std::to_string(n) + " by P_" + std::to_string(n) + " fibres", p.graph,
          fibre_cover(p, r));
    }
  for (int r = 2; r <= 4; ++r)
    for (int k : {3, 4, 5}) {
      // two overlapping arcs, each short enough to be isometric in C_k
      const int half = k / 2;
      std::vector<Vertex> a, c;
      for (int i = 0; i <= half; ++i) a.push_back(i);
      for (int i = half; i < k; ++i) c.push_back(i);
      if (k % 2 == 0) c.push_back(0);
      const auto p = strong_product(path(r), cycle(k));
      run("P_" + std::to_string(r) + " x C_" + std::to_string(k) + " by two strips", p.graph,
          strip_cover(p.map, {VertexSet(a), VertexSet(c)}, r));
    }
  for (int r = 1; r <= 4; ++r)
    for (int n = 2; n <= 5; ++n) {
      const auto spec = family::TreeTSpec::minimal(r);
      const Graph tree = family::tree_T(spec);
      if (over(b, tree.order() * n)) {
        ++t.skipped;
        continue;
      }
      const auto p = strong_product(tree, path(n));
      std::vector<VertexSet> cover;
      for (const auto& strip : family::tree_T_paths(spec)) {
        std::vector<Vertex> vs;
        for (auto v : strip)
          for (int h = 0; h < n; ++h) vs.push_back(p.map.id({v, h}));
        cover.emplace_back(std::move(vs));
      }
      run("T_" + std::to_string(r) + " x P_" + std::to_string(n) + " by path strips", p.graph, cover);
    }
  return finish(t, {{"r", "2..4"}, {"n", "2..5"}});
}

CheckReport characterization(const Budget& b) {
  Tally t(false);
  auto sweep = [&](const Graph& g, const std::string& label) {
    const DistMatrix d = bfs_all_pairs(g);
    const int n = g.order();
    int disagree = 0;
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
      std::vector<Vertex> vs;
      for (int v = 0; v < n; ++v)
        if (mask >> v & 1U) vs.push_back(v);
      const VertexSet s(vs);
      if (is_general_position_set(g, d, s) != check_characterization(g, d, s).verdict()) ++disagree;
    }
    t.add(label, Json{{"disagreements", 0}}, Json{{"disagreements", disagree}});
  };
  for (const auto& g : connected_up_to(b.exhaustive_n)) sweep(g, g6(g));
  for (int i = 0; i < b.sampled_n7; ++i) {
    const Graph g = family::random_connected_graph(7, 0.4, b.seed + i);
    sweep(g, g6(g));
  }
  return finish(t, {{"max_n", std::min(b.exhaustive_n, 6)}, {"sampled_n7", b.sampled_n7}, {"seed", b.seed}});
}

std::vector<Graph> diameter_two(const Budget& b) {
  std::vector<Graph> out;
  for (auto& g : connected_up_to(b.exhaustive_n))
    if (g.order() > 1 && diameter(g) == 2) out.push_back(std::move(g));
  return out;
}

CheckReport diam2(const Budget& b) {
  Tally t(false);
  auto one = [&](const Graph& g, const std::string& label) {
    const int w = clique_number(g).value, e = eta(g).value;
    t.add(label, Json{{"gp", std::max(w, e)}}, Json{{"gp", gp(g)}});
  };
  for (const auto& g : diameter_two(b)) one(g, g6(g));
  one(family::petersen(), "petersen");
  return finish(t, {{"max_n", std::min(b.exhaustive_n, 6)}, {"extra", "petersen"}});
}

bool true_twin_free(const Graph& g) {
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (are_true_twins(g, u, v)) return false;
  return true;
}

CheckReport twin_free(const Budget& b) {
  Tally t(false);
  for (const auto& g : diameter_two(b)) {
    if (!true_twin_free(g)) continue;
    const int v = gp(g);
    const bool lhs = v == omega_sr(g), rhs = v == independence_number(g).value;
    t.add(g6(g), Json{{"gp_is_omega_sr", rhs}}, Json{{"gp_is_omega_sr", lhs}});
  }
  const Graph p = family::petersen();
  t.add_shown("petersen", Json{{"gp", 6}, {"omega_sr", 4}, {"alpha", 4}},
              Json{{"gp", gp(p)}, {"omega_sr", omega_sr(p)}, {"alpha", independence_number(p).value}});
  return finish(t, {{"max_n", std::min(b.exhaustive_n, 6)}, {"extra", "petersen"}});
}

CheckReport block_graphs(const Budget& b) {
  Tally t(true);
  std::mt19937_64 rng(b.seed);
  for (int i = 0; i < 25; ++i) {
    const int n = pick(rng, 2, 20);
    const std::uint64_t seed = rng();
    const Graph tree = family::random_tree(n, seed);
    const int leaves = simplicial_vertices(tree).size();
    t.add("tree n=" + std::to_string(n) + " " + g6(tree), Json{{"gp", leaves}, {"omega_sr", leaves}},
          Json{{"gp", gp(tree)}, {"omega_sr", omega_sr(tree)}});
  }
  return finish(t, {{"trees", 25}, {"max_n", 20}, {"seed", b.seed}});
}

CheckReport multipartite(const Budget&) {
  Tally t(true);
  std::vector<std::vector<int>> shapes;
  for (int a = 2; a <= 4; ++a)
    for (int c = 2; c <= a; ++c) {
      shapes.push_back({a, c});
      for (int e = 2; e <= c; ++e) shapes.push_back({a, c, e});
    }
  for (const auto& parts : shapes) {
    const Graph g = family::complete_multipartite(parts);
    std::string label = "K_{";
    for (std::size_t i = 0; i < parts.size(); ++i) label += (i ? "," : "") + std::to_string(parts[i]);
    label += "}";
    t.add(label, Json{{"gp", parts[0]}, {"omega_sr", parts[0]}}, Json{{"gp", gp(g)}, {"omega_sr", omega_sr(g)}});
  }
  return finish(t, {{"k", "2..3"}, {"parts", "2..4"}});
}

CheckReport corona_check(const Budget&) {
  Tally t(true);
  struct Named {
    std::string name;
    Graph g;
  };
  const std::vector<Named> bases = {{"P_2", path(2)}, {"P_3", path(3)}, {"C_4", cycle(4)}};
  const std::vector<Named> attach = {{"K_1", complete(1)},
                                     {"K_2+K_1", family::disjoint_union({complete(2), complete(1)})},
                                     {"K_3+K_2", family::disjoint_union({complete(3), complete(2)})}};
  auto one = [&](const std::string& label, const ProductGraph& p, int expected) {
    const Graph& g = p.graph;
    const DistMatrix d = bfs_all_pairs(g);
    std::vector<Vertex> copies;
    for (int v = 0; v < g.order(); ++v)
      if (p.map.coord(v).second != kBaseFibre) copies.push_back(v);
    const VertexSet s(copies);
    t.add(label,
          Json{{"gp", expected}, {"omega_sr", expected}, {"copies_gp_set", true}, {"copies_sr_clique", true}},
          Json{{"gp", gp_number(g, d).value},
               {"omega_sr", clique_number(strong_resolving_graph(g, d)).value},
               {"copies_gp_set", s.size() == expected && is_general_position_set(g, d, s)},
               {"copies_sr_clique", is_clique(strong_resolving_graph(g, d), s)}});
  };
  for (const auto& base : bases)
    for (const auto& h : attach)
      one(base.name + " o " + h.name, corona(base.g, h.g), base.g.order() * h.g.order());
  std::vector<Graph> mixed;
  int total = 0;
  for (const auto& h : attach) {
    mixed.push_back(h.g);
    total += h.g.order();
  }
  one("P_3 o (K_1, K_2+K_1, K_3+K_2)", corona(path(3), mixed), total);
  return finish(t, {{"G", "P_2,P_3,C_4"}, {"H", "K_1,K_2+K_1,K_3+K_2"}});
}

CheckReport direct_complete(const Budget&) {
  Tally t(true);
  for (int a = 3; a <= 5; ++a)
    for (int c = 3; c <= a; ++c) {
      const Graph g = direct_product(complete(a), complete(c)).graph;
      const Graph sr = strong_resolving_graph(g);
      t.add("K_" + std::to_string(a) + " x K_" + std::to_string(c), Json{{"gp", a}, {"omega_sr", a}, {"alpha_sr", a}},
            Json{{"gp", gp(g)}, {"omega_sr", clique_number(sr).value}, {"alpha_sr", independence_number(sr).value}});
    }
  for (int a = 3; a <= 5; ++a) {
    const Graph g = direct_product(complete(a), complete(2)).graph;
    t.add("K_" + std::to_string(a) + " x K_2", Json{{"gp", a}, {"omega_sr", 2}},
          Json{{"gp", gp(g)}, {"omega_sr", omega_sr(g)}});
  }
  return finish(t, {{"a", "3..5"}, {"b", "2..a"}});
}

CheckReport krt_times_kn(const Budget&) {
  Tally t(true);
  for (auto [r, s, n] : std::vector<std::array<int, 3>>{{2, 2, 3}, {3, 2, 3}}) {
    const Graph g = direct_product(family::complete_bipartite(r, s), complete(n)).graph;
    t.add("K_{" + std::to_string(r) + "," + std::to_string(s) + "} x K_" + std::to_string(n),
          Json{{"gp", r * n}, {"omega_sr", r + s}}, Json{{"gp", gp(g)}, {"omega_sr", omega_sr(g)}});
  }
  return finish(t, {{"(r,t,n)", "(2,2,3),(3,2,3)"}});
}

CheckReport realization(const Budget&) {
  Tally t(true);
  for (int r = 2; r <= 6; ++r)
    for (int s = 2; s <= r; ++s) {
      const Graph g = family::realization_gadget(r, s);
      t.add("r=" + std::to_string(r) + " t=" + std::to_string(s), Json{{"gp", r}, {"omega_sr", s}},
            Json{{"gp", gp(g)}, {"omega_sr", omega_sr(g)}});
    }
  return finish(t, {{"r", "2..6"}, {"t", "2..r"}});
}

template <class F>
CheckReport strong_pairs(const Budget& b, F&& verdict) {
  Tally t(false);
  const auto graphs = connected_up_to(std::min(4, b.max_factor_n));
  std::vector<int> value;
  for (const auto& g : graphs) value.push_back(gp(g));
  for (std::size_t i = 0; i < graphs.size(); ++i)
    for (std::size_t j = 0; j < graphs.size(); ++j) {
      const Graph p = strong_product(graphs[i], graphs[j]).graph;
      verdict(t, g6(graphs[i]) + " x " + g6(graphs[j]), graphs[i], graphs[j], value[i], value[j], gp(p));
    }
  return finish(t, {{"max_factor_n", std::min(4, b.max_factor_n)}});
}

CheckReport strong_upper(const Budget& b) {
  return strong_pairs(b, [](Tally& t, std::string label, const Graph& g, const Graph& h, int gg, int gh, int v) {
    const int bound = std::min(g.order() * gh, h.order() * gg);
    t.add(std::move(label), "gp <= min(n(G) gp(H), n(H) gp(G))", Json{{"gp", v}, {"bound", bound}}, v <= bound);
  });
}

CheckReport strong_lower(const Budget& b) {
  return strong_pairs(b, [](Tally& t, std::string label, const Graph&, const Graph&, int gg, int gh, int v) {
    t.add(std::move(label), "gp >= gp(G) gp(H)", Json{{"gp", v}, {"bound", gg * gh}}, v >= gg * gh);
  });
}

CheckReport strong_grid(const Budget&) {
  Tally t(true);
  for (int n = 2; n <= 6; ++n)
    for (int m = 2; m <= 6; ++m)
      t.add("P_" + std::to_string(n) + " x P_" + std::to_string(m), Json{{"gp", 4}},
            Json{{"gp", gp(strong_product(path(n), path(m)).graph)}});
  return finish(t, {{"n", "2..6"}, {"m", "2..6"}});
}

CheckReport complete_factor(const Budget& b) {
  Tally t(true);
  const std::vector<std::pair<std::string, Graph>> bases = {{"P_4", path(4)},
                                                            {"C_5", cycle(5)},
                                                            {"K_{1,3}", family::star(3)},
                                                            {"C_6", cycle(6)},
                                                            {"K_{2,3}", family::complete_bipartite(2, 3)}};
  for (const auto& [name, g] : bases) {
    const int base = gp(g);
    const bool equal = base == omega_sr(g);
    for (int n = 1; n <= 3; ++n) {
      if (g.order() > b.max_factor_n) {
        ++t.skipped;
        continue;
      }
      const Graph p = strong_product(g, complete(n)).graph;
      Json expected{{"gp", n * base}}, computed{{"gp", gp(p)}};
      if (equal) {
        expected["omega_sr"] = n * base;
        computed["omega_sr"] = omega_sr(p);
      }
      t.add(name + " x K_" + std::to_string(n), std::move(expected), std::move(computed));
    }
  }
  return finish(t, {{"G", "P_4,C_5,K_{1,3},C_6,K_{2,3}"}, {"n", "1..3"}});
}

CheckReport tree_T(const Budget& b) {
  Tally t(true);
  for (int r = 1; r <= 3; ++r)
    for (int n = 2; n <= 3; ++n) {
      const Graph tree = family::tree_T(family::TreeTSpec::minimal(r));
      if (over(b, tree.order() * n)) {
        ++t.skipped;
        continue;
      }
      const Graph p = strong_product(tree, path(n)).graph;
      t.add("T_" + std::to_string(r) + " x P_" + std::to_string(n), Json{{"gp", 4 * r}, {"omega_sr", 4 * r}},
            Json{{"gp", gp(p)}, {"omega_sr", omega_sr(p)}});
    }
  return finish(t, {{"r", "1..3"}, {"n", "2..3"}, {"tree", "minimal"}});
}

CheckReport strong_bipartite(const Budget&) {
  Tally t(true);
  for (int r1 = 1; r1 <= 3; ++r1)
    for (int t1 = 1; t1 <= r1; ++t1)
      for (int r2 = 1; r2 <= 3; ++r2)
        for (int t2 = 1; t2 <= r2; ++t2) {
          const Graph g =
              strong_product(family::complete_bipartite(r1, t1), family::complete_bipartite(r2, t2)).graph;
          const int e = r1 * r2;
          t.add("K_{" + std::to_string(r1) + "," + std::to_string(t1) + "} x K_{" + std::to_string(r2) + "," +
                    std::to_string(t2) + "}",
                Json{{"gp", e}, {"omega_sr", e}, {"alpha", e}},
                Json{{"gp", gp(g)}, {"omega_sr", omega_sr(g)}, {"alpha", independence_number(g).value}});
        }
  return finish(t, {{"r_i", "1..3"}, {"t_i", "1..r_i"}});
}

CheckReport odd_cylinder(const Budget& b) {
  Tally t(true);
  for (int r = 2; r <= 4; ++r)
    for (int s = 1; s <= 3; ++s) {
      if (2 * s + 1 > b.max_factor_n) {
        ++t.skipped;
        continue;
      }
      const int v = gp(strong_product(path(r), cycle(2 * s + 1)).graph);
      const bool exact = s <= 2 || r == 2;
      t.add("P_" + std::to_string(r) + " x C_" + std::to_string(2 * s + 1), exact ? "gp = 6" : "6 <= gp <= 7",
            Json{{"gp", v}}, exact ? v == 6 : (v >= 6 && v <= 7));
    }
  return finish(t, {{"r", "2..4"}, {"t", "1..3"}});
}

CheckReport remark_bounds(const Budget&) {
  Tally t(true);
  auto range = [&](const std::string& label, const Graph& g, int lo, int hi) {
    const int v = gp(g);
    t.add(label, std::to_string(lo) + " <= gp <= " + std::to_string(hi), Json{{"gp", v}}, v >= lo && v <= hi);
  };
  for (int r = 2; r <= 4; ++r)
    range("P_" + std::to_string(r) + " x C_6", strong_product(path(r), cycle(6)).graph, 6, 8);
  range("C_5 x C_6", strong_product(cycle(5), cycle(6)).graph, 9, 16);
  range("C_4 x C_5", strong_product(cycle(4), cycle(5)).graph, 9, 14);
  const Graph c44 = strong_product(cycle(4), cycle(4)).graph;
  t.add("C_4 x C_4", Json{{"gp", 4}, {"omega_sr", 4}}, Json{{"gp", gp(c44)}, {"omega_sr", omega_sr(c44)}});
  return finish(t, {{"even_cylinder", "P_r x C_6, r=2..4"}, {"tori", "C_5 x C_6, C_4 x C_5, C_4 x C_4"}});
}

CheckReport blow_up(const Budget& b) {
  Tally t(true);
  struct Base {
    Graph g;
    VertexSet s;
  };
  std::vector<Base> bases;
  for (auto& g : connected_up_to(std::min(5, b.exhaustive_n)))
    if (g.order() >= 2)
      if (auto s = gp_set_inducing_sr_clique(g)) bases.push_back({std::move(g), *s});
  std::mt19937_64 rng(b.seed);
  for (int i = 0; i < 10 && !bases.empty(); ++i) {
    const Base& base = bases[pick(rng, 0, static_cast<int>(bases.size()) - 1)];
    const int threshold = pick(rng, 1, 3);
    std::vector<Graph> parts;
    std::vector<int> k;
    int expected = 0;
    for (int v = 0; v < base.g.order(); ++v) {
      const bool in = base.s.contains(v);
      k.push_back(in ? pick(rng, threshold, 3) : pick(rng, 1, threshold));
      parts.push_back(complete(k.back()));
      if (in) expected += k.back();
    }
    const Graph g = generalized_lexicographic(base.g, parts).graph;
    const DistMatrix d = bfs_all_pairs(g);
    std::string label = g6(base.g) + " S=" + to_string(base.s) + " k=(";
    for (std::size_t j = 0; j < k.size(); ++j) label += (j ? "," : "") + std::to_string(k[j]);
    label += ")";
    t.add(label, Json{{"gp", expected}, {"omega_sr", expected}, {"gp_brute_force", expected}},
          Json{{"gp", gp_number(g, d).value},
               {"omega_sr", clique_number(strong_resolving_graph(g, d)).value},
               {"gp_brute_force", gp_brute_force(g, d).value}});
  }
  return finish(t, {{"instances_requested", 10}, {"base_max_n", 5}, {"seed", b.seed}});
}

// All maximum general position sets of a small gadget.
std::vector<VertexSet> gp_sets(const Graph& h) {
  const DistMatrix d = bfs_all_pairs(h);
  const int target = gp_number(h, d).value, n = h.order();
  std::vector<VertexSet> out;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    if (std::popcount(mask) != target) continue;
    std::vector<Vertex> vs;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1U) vs.push_back(v);
    VertexSet s(vs);
    if (is_general_position_set(h, d, s)) out.push_back(std::move(s));
  }
  return out;
}

bool interval_free(const Graph& h, const DistMatrix& d, Vertex root, const VertexSet& s) {
  for (auto u : s)
    for (auto w : s)
      if (u != w && interval(h, d, root, w).contains(u)) return false;
  return true;
}

struct Gadget {
  std::string name;
  Graph h;
  Vertex root;
};

std::optional<VertexSet> root_avoiding_set(const Gadget& gd) {
  const DistMatrix d = bfs_all_pairs(gd.h);
  for (const auto& s : gp_sets(gd.h))
    if (!s.contains(gd.root) && interval_free(gd.h, d, gd.root, s)) return s;
  return std::nullopt;
}

CheckReport rooted(const Budget&) {
  Tally t(true);
  const std::vector<std::pair<std::string, Graph>> bases = {{"P_3", path(3)}, {"C_4", cycle(4)}, {"K_4", complete(4)}};
  auto product = [](const Graph& base, const Gadget& gd) { return rooted_product({base, gd.h, gd.root}).graph; };
  auto label = [](const std::string& base, const Gadget& gd) {
    return base + " o " + gd.name + "@" + std::to_string(gd.root);
  };

  const std::vector<Gadget> leaf_paths = {{"P_2", path(2), 0}, {"P_3", path(3), 0}, {"P_4", path(4), 0}};
  const std::vector<Gadget> others = {{"P_3", path(3), 1},           {"P_4", path(4), 1},
                                      {"K_3", complete(3), 0},       {"C_4", cycle(4), 0},
                                      {"K_{1,3}", family::star(3), 0}, {"K_{1,3}", family::star(3), 1},
                                      {"K_5+root", family::rooted_clique_gadget(5, 2).graph, 5}};
  for (const auto& [bn, base] : bases) {
    const int n = base.order();
    for (const auto& gd : leaf_paths) {
      const Graph g = product(base, gd);
      t.add("(i) " + label(bn, gd), Json{{"gp", n}, {"omega_sr", n}}, Json{{"gp", gp(g)}, {"omega_sr", omega_sr(g)}});
    }
    for (const auto& gd : others) {
      const int v = gp(product(base, gd));
      t.add("(i) converse " + label(bn, gd), "gp > " + std::to_string(n), Json{{"gp", v}}, v > n);
    }
  }

  // (ii): a root-avoiding gp-set with no member on a geodesic from the root
  // to another member. The last gadgets' sets are maximum SR-cliques too.
  const std::vector<std::pair<Gadget, bool>> avoiding = {
      {{"K_{1,3}", family::star(3), 0}, true}, {{"P_5", path(5), 2}, true}, {{"C_4", cycle(4), 0}, false}};
  for (const auto& [bn, base] : bases) {
    const int n = base.order();
    for (const auto& [gd, sr_clique] : avoiding) {
      const auto s = root_avoiding_set(gd);
      const Graph g = product(base, gd);
      const int gh = gp(gd.h);
      Json expected{{"hypothesis", true}, {"gp", n * gh}};
      Json computed{{"hypothesis", s.has_value()}, {"gp", gp(g)}};
      if (sr_clique) {
        expected["omega_sr"] = n * gh;
        computed["omega_sr"] = omega_sr(g);
      }
      t.add("(ii) " + label(bn, gd), std::move(expected), std::move(computed));
    }
  }

  // (iii): every gp-set contains the root or a member between the root and another
  struct Third {
    Gadget gd;
    bool all_contain_root;
  };
  const std::vector<Third> third = {{{"K_3", complete(3), 0}, true},
                                    {{"K_3", complete(3), 2}, true},
                                    {{"K_4", complete(4), 0}, true},
                                    {{"K_{1,3}", family::star(3), 1}, true},
                                    {{"K_5+root", family::rooted_clique_gadget(5, 2).graph, 5}, false}};
  for (const auto& [bn, base] : bases) {
    const int n = base.order();
    for (const auto& [gd, all_root] : third) {
      const auto sets = gp_sets(gd.h);
      const bool contain = std::all_of(sets.begin(), sets.end(), [&](const VertexSet& s) { return s.contains(gd.root); });
      const bool hypothesis = !root_avoiding_set(gd).has_value();
      const int gh = gp(gd.h), v = gp(product(base, gd));
      const int hi = n * (gh - 1);
      const bool ok = hypothesis && contain == all_root && (all_root ? v == hi : (v >= 2 * n && v <= hi));
      t.add("(iii) " + label(bn, gd),
            all_root ? "gp = " + std::to_string(hi) : std::to_string(2 * n) + " <= gp <= " + std::to_string(hi),
            Json{{"hypothesis", hypothesis}, {"all_gp_sets_contain_root", contain}, {"gp", v}}, ok);
    }
    for (const auto& gd : {Gadget{"P_3", path(3), 1}, Gadget{"P_4", path(4), 1}, Gadget{"P_5", path(5), 2}}) {
      t.add("degree-2 root " + label(bn, gd), Json{{"gp", 2 * n}}, Json{{"gp", gp(product(base, gd))}});
    }
  }
  return finish(t, {{"bases", "P_3,C_4,K_4"}});
}

CheckReport rooted_gap(const Budget&) {
  Tally t(true);
  for (auto [r, s] : std::vector<std::pair<int, int>>{{5, 2}, {6, 2}, {6, 3}})
    for (const auto& [bn, base] : std::vector<std::pair<std::string, Graph>>{{"P_3", path(3)}, {"C_4", cycle(4)}}) {
      const auto gd = family::rooted_clique_gadget(r, s);
      const Graph g = rooted_product({base, gd.graph, gd.root}).graph;
      t.add(bn + " o K_" + std::to_string(r) + "(t=" + std::to_string(s) + ")",
            Json{{"gp", base.order() * std::max(s, r - s)}}, Json{{"gp", gp(g)}});
    }
  return finish(t, {{"(r,t)", "(5,2),(6,2),(6,3)"}, {"bases", "P_3,C_4"}});
}

CheckReport explorer_check(Problem problem, const std::string& g_src, const std::string& h_src, const Budget& b) {
  ExploreBudget eb;
  eb.max_product_n = b.max_product_n;
  const ExplorerReport r = explore_conjecture(problem, load_catalog(g_src), load_catalog(h_src), eb);
  CheckReport out;
  out.params = {{"G", g_src}, {"H", h_src}, {"pairs", r.examined}, {"skipped", r.skipped}, {"table", r.table}};
  out.expected = Json{{"violations", 0}, {"complete", true}};
  out.computed = Json{{"violations", r.violations.size()}, {"complete", r.complete}};
  out.pass = out.expected == out.computed;
  for (const auto& v : r.violations) out.instances.push_back({v.g + " x " + v.h, "no violation", v.values, false});
  for (const auto& c : r.counterexamples) out.instances.push_back({c.g + " x " + c.h, "open question", c.values, true});
  return out;
}

CheckReport explorer_problem_1(const Budget& b) {
  CheckReport r = explorer_check(Problem::DirectDichotomy, "complete:3-5", "complete:3-5", b);
  r.expected["equal_diam2"] = 9;
  r.computed["equal_diam2"] = r.params["table"].value("equal_diam2", 0);
  r.pass = r.expected == r.computed;
  return r;
}

CheckReport explorer_problem_2(const Budget& b) {
  const std::string src = "connected:1-" + std::to_string(std::min(4, b.max_factor_n));
  return explorer_check(Problem::StrongMultiplicative, src, src, b);
}

struct Entry {
  ClaimInfo info;
  std::function<CheckReport(const Budget&)> run;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> list = {
      {{"thm-3.1-lower-bound", "gp(G) >= omega(G_SR)", "all connected graphs, n <= 6"}, lower_bound},
      {{"thm-3.1-equality", "gp(G) = omega(G_SR) iff some gp-set is a clique of G_SR", "all connected graphs, n <= 6"},
       equality_condition},
      {{"thm-2.1-isometric-cover", "gp(G) <= sum of gp(H_i) over an isometric cover",
        "strong grids, cylinders, tree strips; r <= 4, n <= 5"},
       isometric_cover},
      {{"thm-2.2-characterization",
        "S in general position iff its components are cliques forming an in-transitive distance-constant partition",
        "every S, connected n <= 6, plus sampled n = 7"},
       characterization},
      {{"thm-2.3-diam2", "diam 2 implies gp = max(omega, eta)", "diameter-2 graphs n <= 6, Petersen"}, diam2},
      {{"prop-twin-free", "true-twin-free diam 2: gp = omega(G_SR) iff gp = alpha",
        "diameter-2 twin-free graphs n <= 6, Petersen"},
       twin_free},
      {{"block-graphs", "trees: gp = omega(G_SR) = number of leaves", "25 random trees, n <= 20"}, block_graphs},
      {{"multipartite", "K_{n_1..n_k}: gp = omega(G_SR) = n_1", "k in {2,3}, 2 <= parts <= 4"}, multipartite},
      {{"prop-corona", "union of cliques H: gp(G o H) = n(G) sum n_i = omega(SR)",
        "G in {P_2,P_3,C_4}, H in {K_1, K_2+K_1, K_3+K_2}"},
       corona_check},
      {{"prop-direct-complete", "gp(K_a x K_b) = a = omega(SR) = alpha(SR); b = 2 gives omega(SR) = 2",
        "2 <= b <= a <= 5"},
       direct_complete},
      {{"krt-times-kn", "gp(K_{r,t} x K_n) = rn, omega(SR) = r + t", "(2,2,3), (3,2,3)"}, krt_times_kn},
      {{"realization", "a graph with gp = r and omega(G_SR) = t", "2 <= t <= r <= 6"}, realization},
      {{"cor-strong-upper", "gp(G x H) <= min(n(G) gp(H), n(H) gp(G))", "connected pairs, orders <= 4"},
       strong_upper},
      {{"thm-strong-lower", "gp(G x H) >= gp(G) gp(H)", "connected pairs, orders <= 4"}, strong_lower},
      {{"eq-1-strong-grid", "gp(P_n x P_m) = 4", "2 <= n, m <= 6"}, strong_grid},
      {{"prop-complete-factor", "gp(G x K_n) = n gp(G), and = omega(SR) when gp(G) = omega(G_SR)",
        "G in {P_4, C_5, K_{1,3}, C_6, K_{2,3}}, n <= 3"},
       complete_factor},
      {{"prop-tree-T", "gp(T x P_n) = 4r = omega(SR)", "minimal trees r <= 3, n in {2,3}"}, tree_T},
      {{"prop-strong-bipartite", "gp(K_{r1,t1} x K_{r2,t2}) = r1 r2 = omega(SR) = alpha", "1 <= t_i <= r_i <= 3"},
       strong_bipartite},
      {{"thm-odd-cylinder", "6 <= gp(P_r x C_{2t+1}) <= 7, = 6 when t <= 2 or r = 2", "r <= 4, t <= 3"},
       odd_cylinder},
      {{"remark-bounds", "cylinder and torus bounds; gp(C_4 x C_4) = 4 = omega(SR)",
        "P_r x C_6 (r <= 4), C_5 x C_6, C_4 x C_5, C_4 x C_4"},
       remark_bounds},
      {{"thm-blow-up", "gp(G[K_k1..K_kn]) = sum of k_i over S = omega(SR)", "10 random instances, base n <= 5"},
       blow_up},
      {{"thm-rooted", "rooted products: path gadgets, root-avoiding gp-sets, root-containing gp-sets",
        "bases P_3, C_4, K_4"},
       rooted},
      {{"prop-rooted-gap", "clique gadget: gp(G o H) = n max(t, r - t)", "(r,t) in {(5,2),(6,2),(6,3)}, bases P_3, C_4"},
       rooted_gap},
      {{"explorer-problem-1", "direct products: equality only with diameter 2 (evidence)", "K_a x K_b, 3 <= a,b <= 5"},
       explorer_problem_1},
      {{"explorer-problem-2", "gp(G x H) = gp(G) gp(H)? no violations of >= (evidence)",
        "all connected pairs, orders <= 4"},
       explorer_problem_2},
  };
  return list;
}

bool glob_match(std::string_view pat, std::string_view s) {
  if (pat.empty()) return s.empty();
  if (pat[0] == '*') {
    for (std::size_t i = 0; i <= s.size(); ++i)
      if (glob_match(pat.substr(1), s.substr(i))) return true;
    return false;
  }
  return !s.empty() && pat[0] == s[0] && glob_match(pat.substr(1), s.substr(1));
}

}  // namespace

const std::vector<ClaimInfo>& claim_registry() {
  static const std::vector<ClaimInfo> infos = [] {
    std::vector<ClaimInfo> out;
    for (const auto& e : entries()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

std::vector<std::string> select_claims(const std::vector<std::string>& patterns) {
  std::vector<bool> chosen(entries().size(), false);
  for (const auto& p : patterns) {
    bool any = false;
    for (std::size_t i = 0; i < entries().size(); ++i)
      if (glob_match(p, entries()[i].info.id)) chosen[i] = any = true;
    if (!any) throw Error(ErrorCode::UnknownClaimId, "no claim matches '" + p + "'");
  }
  std::vector<std::string> out;
  for (std::size_t i = 0; i < entries().size(); ++i)
    if (chosen[i]) out.push_back(entries()[i].info.id);
  return out;
}

CheckReport run_check(const std::string& id, const Budget& budget) {
  for (const auto& e : entries()) {
    if (e.info.id != id) continue;
    const auto start = std::chrono::steady_clock::now();
    CheckReport r = e.run(budget);
    r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    r.claim_id = id;
    r.statement = e.info.statement;
    return r;
  }
  throw Error(ErrorCode::UnknownClaimId, "unknown claim '" + id + "'");
}

std::vector<CheckReport> run_checks(const std::vector<std::string>& patterns, const Budget& budget, int jobs) {
  const auto ids = select_claims(patterns);
  std::vector<CheckReport> out(ids.size());
  std::vector<std::exception_ptr> errors(ids.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < ids.size();) {
      try {
        out[i] = run_check(ids[i], budget);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int threads = std::clamp(jobs, 1, static_cast<int>(std::max<std::size_t>(ids.size(), 1)));
  std::vector<std::thread> pool;
  for (int i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

bool all_pass(const std::vector<CheckReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.pass; });
}

}  // namespace genpos
