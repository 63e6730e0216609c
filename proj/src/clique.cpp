#include "genpos/clique.hpp"

#include <algorithm>
#include <numeric>

namespace genpos {
namespace {

// Vertices are renumbered by non-increasing degree so that the colouring
// visits high-degree vertices first; witnesses are mapped back on exit.
class CliqueSearch {
 public:
  explicit CliqueSearch(const Graph& g) : n_(g.order()), order_(n_) {
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
    std::vector<int> pos(n_);
    for (int i = 0; i < n_; ++i) pos[order_[i]] = i;
    adj_.assign(n_, Bitset(n_));
    for (int u = 0; u < n_; ++u)
      for (int v = g.neighbors(u).first(); v >= 0; v = g.neighbors(u).next(v + 1)) adj_[pos[u]].set(pos[v]);
  }

  CliqueResult run() {
    CliqueResult out;
    if (n_ == 0) return out;
    Bitset current(n_);
    best_ = Bitset(n_);
    best_.set(0);
    best_size_ = 1;
    expand(current, 0, Bitset::full(n_));
    std::vector<Vertex> w;
    for (int v : best_.members()) w.push_back(order_[v]);
    out.value = best_size_;
    out.witness = VertexSet(std::move(w));
    out.nodes_explored = nodes_;
    return out;
  }

 private:
  void expand(Bitset& current, int size, Bitset candidates) {
    ++nodes_;
    std::vector<int> verts, colours;
    colour(candidates, verts, colours);
    for (int i = static_cast<int>(verts.size()) - 1; i >= 0; --i) {
      if (size + colours[i] <= best_size_) return;
      const int v = verts[i];
      current.set(v);
      Bitset next = candidates & adj_[v];
      if (next.none()) {
        if (size + 1 > best_size_) {
          best_size_ = size + 1;
          best_ = current;
        }
      } else {
        expand(current, size + 1, std::move(next));
      }
      current.reset(v);
      candidates.reset(v);
    }
  }

  void colour(const Bitset& candidates, std::vector<int>& verts, std::vector<int>& colours) const {
    Bitset uncoloured = candidates;
    int k = 0;
    while (uncoloured.any()) {
      ++k;
      Bitset q = uncoloured;
      while (q.any()) {
        const int v = q.first();
        q.reset(v);
        q.subtract(adj_[v]);
        uncoloured.reset(v);
        verts.push_back(v);
        colours.push_back(k);
      }
    }
  }

  int n_;
  std::vector<int> order_;
  std::vector<Bitset> adj_;
  Bitset best_;
  int best_size_ = 0;
  std::int64_t nodes_ = 0;
};

}  // namespace

CliqueResult clique_number(const Graph& g) { return CliqueSearch(g).run(); }

CliqueResult independence_number(const Graph& g) { return clique_number(complement(g)); }

bool is_clique(const Graph& g, const VertexSet& s) {
  for (int i = 0; i < s.size(); ++i)
    for (int j = i + 1; j < s.size(); ++j)
      if (!g.adjacent(s[i], s[j])) return false;
  return true;
}

bool is_independent(const Graph& g, const VertexSet& s) {
  for (int i = 0; i < s.size(); ++i)
    for (int j = i + 1; j < s.size(); ++j)
      if (g.adjacent(s[i], s[j])) return false;
  return true;
}

}  // namespace genpos
