#include "genpos/explorer.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "genpos/families.hpp"
#include "genpos/gp.hpp"
#include "genpos/io.hpp"
#include "genpos/products.hpp"
#include "genpos/strong_resolving.hpp"

namespace genpos {
namespace {

int to_int(std::string_view s, const std::string& source) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size())
    throw Error(ErrorCode::InvalidParameter, "bad range in catalog name '" + source + "'");
  return v;
}

std::pair<int, int> parse_range(std::string_view s, const std::string& source) {
  const auto dash = s.find('-');
  if (dash == std::string_view::npos) {
    const int v = to_int(s, source);
    return {v, v};
  }
  const int lo = to_int(s.substr(0, dash), source), hi = to_int(s.substr(dash + 1), source);
  if (lo > hi) throw Error(ErrorCode::InvalidParameter, "empty range in catalog name '" + source + "'");
  return {lo, hi};
}

std::optional<Catalog> builtin(const std::string& source) {
  const auto colon = source.find(':');
  if (colon == std::string::npos) return std::nullopt;
  const std::string name = source.substr(0, colon);
  Graph (*make)(int) = nullptr;
  if (name == "path") make = family::path;
  else if (name == "cycle") make = family::cycle;
  else if (name == "complete") make = family::complete;
  else if (name == "star") make = family::star;
  else if (name != "connected") return std::nullopt;

  const auto [lo, hi] = parse_range(std::string_view(source).substr(colon + 1), source);
  Catalog c;
  c.source = source;
  for (int k = lo; k <= hi; ++k) {
    if (make) {
      c.graphs.push_back({make(k), name + ":" + std::to_string(k)});
      continue;
    }
    int i = 0;
    for (auto& g : enumerate_connected_graphs(k))
      c.graphs.push_back({std::move(g), "connected:" + std::to_string(k) + "#" + std::to_string(i++)});
  }
  return c;
}

GraphFormat sniff(std::istream& in) {
  std::string line;
  const auto pos = in.tellg();
  GraphFormat f = GraphFormat::Graph6;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    if (line[first] == 'n' && (line.size() == first + 1 || line[first + 1] == ' ' || line[first + 1] == '\t'))
      f = GraphFormat::EdgeList;
    break;
  }
  in.clear();
  in.seekg(pos);
  return f;
}

}  // namespace

Catalog make_catalog(std::string source, const std::vector<Graph>& graphs) {
  Catalog c;
  c.source = std::move(source);
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (graphs[i].order() == 0 || !is_connected(graphs[i])) {
      ++c.rejected;
      continue;
    }
    c.graphs.push_back({graphs[i], c.source + "#" + std::to_string(i)});
  }
  return c;
}

Catalog load_catalog(const std::string& source) {
  if (auto c = builtin(source)) return *c;
  std::ifstream in(source);
  if (!in) throw Error(ErrorCode::InvalidParameter, "cannot open catalog '" + source + "'");
  return make_catalog(source, read_graphs(in, sniff(in)));
}

Problem parse_problem(std::string_view name) {
  if (name == "problem-1") return Problem::DirectDichotomy;
  if (name == "problem-2") return Problem::StrongMultiplicative;
  throw Error(ErrorCode::InvalidParameter, "unknown problem '" + std::string(name) + "'");
}

std::string_view to_string(Problem p) { return p == Problem::DirectDichotomy ? "problem-1" : "problem-2"; }

ExplorerReport explore_conjecture(Problem problem, const Catalog& cg, const Catalog& ch, const ExploreBudget& budget) {
  ExplorerReport r;
  r.problem = problem;
  r.g_source = cg.source;
  r.h_source = ch.source;
  const std::int64_t ng = static_cast<std::int64_t>(cg.graphs.size()), nh = static_cast<std::int64_t>(ch.graphs.size());
  r.total_pairs = ng * nh;
  r.start = std::clamp<std::int64_t>(budget.start, 0, r.total_pairs);

  std::map<std::string, std::int64_t> counts;
  std::vector<int> gp_g(ng, -1), gp_h(nh, -1);
  auto factor_gp = [](std::vector<int>& cache, const Catalog& c, std::int64_t i) {
    if (cache[i] < 0) cache[i] = gp_number(c.graphs[i].graph).value;
    return cache[i];
  };

  std::int64_t idx = r.start;
  for (; idx < r.total_pairs; ++idx) {
    if (budget.max_pairs >= 0 && r.examined + r.skipped >= budget.max_pairs) break;
    const std::int64_t i = idx / nh, j = idx % nh;
    const Graph& g = cg.graphs[i].graph;
    const Graph& h = ch.graphs[j].graph;
    PairRecord rec{idx, cg.graphs[i].provenance + " " + emit_graph6(g), ch.graphs[j].provenance + " " + emit_graph6(h), {}};

    if (g.order() * h.order() > budget.max_product_n) {
      ++r.skipped;
      ++counts["skipped_too_large"];
      continue;
    }
    if (problem == Problem::StrongMultiplicative) {
      const ProductGraph p = strong_product(g, h);
      const GpResult res = gp_number(p.graph);
      const int a = factor_gp(gp_g, cg, i), b = factor_gp(gp_h, ch, j);
      rec.values = {{"gp_G", a}, {"gp_H", b}, {"gp_product", res.value}, {"witness", to_string(res.witness)}};
      ++r.examined;
      if (res.value < a * b) r.violations.push_back(rec);
      if (res.value == a * b) {
        ++counts["equal"];
      } else {
        ++counts[res.value > a * b ? "strict" : "below"];
        r.counterexamples.push_back(std::move(rec));
      }
      continue;
    }

    if (g.order() < 2 || h.order() < 2) {
      ++r.skipped;
      ++counts["skipped_trivial_factor"];
      continue;
    }
    const ProductGraph p = direct_product(g, h);
    if (!is_connected(p.graph)) {
      ++r.skipped;
      ++counts["skipped_disconnected"];
      continue;
    }
    const DistMatrix d = bfs_all_pairs(p.graph);
    const GpResult res = gp_number(p.graph, d);
    const CliqueResult w = clique_number(strong_resolving_graph(p.graph, d));
    const int diam = diameter(p.graph, d);
    ++r.examined;
    const bool equal = res.value == w.value;
    ++counts[std::string(equal ? "equal" : "unequal") + (diam == 2 ? "_diam2" : "_diam_other")];
    if (equal && diam != 2) {
      rec.values = {{"gp", res.value},
                    {"omega_sr", w.value},
                    {"diam", diam},
                    {"gp_witness", to_string(res.witness)},
                    {"sr_clique", to_string(w.witness)}};
      r.counterexamples.push_back(std::move(rec));
    }
  }
  r.next_cursor = idx;
  r.complete = idx == r.total_pairs;
  for (const auto& [k, v] : counts) r.table[k] = v;
  return r;
}

}  // namespace genpos
