#include <algorithm>
#include <map>

#include "genpos/families.hpp"

namespace genpos {
namespace {

using Cells = std::vector<std::vector<Vertex>>;

// Splits cells by neighbour counts into every other cell until the
// partition is equitable. Split order depends only on the counts, so the
// result commutes with relabeling.
void refine(const Graph& g, Cells& cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<int> cell_of(g.order());
    for (int c = 0; c < static_cast<int>(cells.size()); ++c)
      for (auto v : cells[c]) cell_of[v] = c;
    for (int c = 0; c < static_cast<int>(cells.size()); ++c) {
      if (cells[c].size() < 2) continue;
      std::vector<std::pair<std::vector<int>, Vertex>> keyed;
      for (auto v : cells[c]) {
        std::vector<int> sig(cells.size(), 0);
        const Bitset& nv = g.neighbors(v);
        for (int w = nv.first(); w >= 0; w = nv.next(w + 1)) ++sig[cell_of[w]];
        keyed.emplace_back(std::move(sig), v);
      }
      std::sort(keyed.begin(), keyed.end());
      if (keyed.front().first == keyed.back().first) continue;
      Cells split;
      for (std::size_t i = 0; i < keyed.size(); ++i) {
        if (i == 0 || keyed[i].first != keyed[i - 1].first) split.emplace_back();
        split.back().push_back(keyed[i].second);
      }
      cells.erase(cells.begin() + c);
      cells.insert(cells.begin() + c, split.begin(), split.end());
      changed = true;
      break;
    }
  }
}

std::string encode(const Graph& g, const std::vector<Vertex>& order) {
  const int n = g.order();
  std::string out(1, static_cast<char>(n));
  unsigned char byte = 0;
  int bits = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      byte = static_cast<unsigned char>(byte << 1 | (g.adjacent(order[i], order[j]) ? 1 : 0));
      if (++bits == 8) {
        out.push_back(static_cast<char>(byte));
        byte = 0;
        bits = 0;
      }
    }
  if (bits) out.push_back(static_cast<char>(byte << (8 - bits)));
  return out;
}

bool twins(const Graph& g, Vertex u, Vertex w) {
  Bitset a = g.neighbors(u), b = g.neighbors(w);
  a.reset(w);
  b.reset(u);
  return a == b;
}

struct Search {
  const Graph& g;
  std::string best;
  std::vector<Vertex> best_order;

  void run(Cells cells) {
    refine(g, cells);
    int target = -1;
    for (int c = 0; c < static_cast<int>(cells.size()); ++c)
      if (cells[c].size() > 1 && (target < 0 || cells[c].size() < cells[target].size())) target = c;
    if (target < 0) {
      std::vector<Vertex> order;
      for (const auto& c : cells) order.push_back(c[0]);
      std::string cert = encode(g, order);
      if (best_order.empty() || cert < best) {
        best = std::move(cert);
        best_order = std::move(order);
      }
      return;
    }
    std::vector<Vertex> tried;
    for (auto v : cells[target]) {
      // swapping twins is an automorphism fixing everything individualized so far
      if (std::any_of(tried.begin(), tried.end(), [&](Vertex u) { return twins(g, u, v); })) continue;
      tried.push_back(v);
      Cells next = cells;
      std::vector<Vertex> rest;
      for (auto w : cells[target])
        if (w != v) rest.push_back(w);
      next[target] = {v};
      next.insert(next.begin() + target + 1, rest);
      run(std::move(next));
    }
  }
};

Search canonical_search(const Graph& g) {
  if (g.order() > kCanonicalMaxOrder)
    throw Error(ErrorCode::TooLarge, "canonical form supports up to " + std::to_string(kCanonicalMaxOrder) + " vertices");
  Search s{g, {}, {}};
  if (g.order() == 0) {
    s.best = std::string(1, '\0');
    return s;
  }
  Cells cells(1);
  for (int v = 0; v < g.order(); ++v) cells[0].push_back(v);
  s.run(std::move(cells));
  return s;
}

}  // namespace

CanonicalForm canonical_form(const Graph& g) { return {canonical_search(g).best}; }

std::vector<Vertex> canonical_order(const Graph& g) { return canonical_search(g).best_order; }

bool are_isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

std::vector<Graph> enumerate_connected_graphs(int n) {
  if (n < 1 || n > 6) throw Error(ErrorCode::InvalidParameter, "enumeration supports 1 <= n <= 6");
  std::vector<Edge> slots;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  std::map<std::pair<int, CanonicalForm>, Graph> classes;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << slots.size()); ++mask) {
    GraphBuilder b(n);
    for (std::size_t i = 0; i < slots.size(); ++i)
      if (mask >> i & 1U) b.add_edge(slots[i].first, slots[i].second);
    Graph g = std::move(b).build();
    if (!is_connected(g)) continue;
    const Search s = canonical_search(g);
    auto key = std::make_pair(g.size(), CanonicalForm{s.best});
    if (classes.contains(key)) continue;
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[s.best_order[i]] = i;
    GraphBuilder relabeled(n);
    for (auto [u, v] : g.edges()) relabeled.add_edge(pos[u], pos[v]);
    classes.emplace(std::move(key), std::move(relabeled).build());
  }
  std::vector<Graph> out;
  out.reserve(classes.size());
  for (auto& [key, g] : classes) out.push_back(std::move(g));
  return out;
}

}  // namespace genpos
