#include "genpos/hypergraph_mis.hpp"

#include <algorithm>

namespace genpos {

TripleSystem::TripleSystem(int n) : n_(n), pair_(static_cast<std::size_t>(n) * n, Bitset(n)) {}

void TripleSystem::add(Vertex a, Vertex b, Vertex c) {
  if (a == b || b == c || a == c) throw Error(ErrorCode::InvalidVertex, "hyperedge needs three distinct vertices");
  if (contains(a, b, c)) return;
  auto at = [&](Vertex x, Vertex y) -> Bitset& { return pair_[static_cast<std::size_t>(x) * n_ + y]; };
  at(a, b).set(c);
  at(b, a).set(c);
  at(a, c).set(b);
  at(c, a).set(b);
  at(b, c).set(a);
  at(c, b).set(a);
  ++count_;
}

int TripleSystem::degree(Vertex v) const {
  int twice = 0;
  for (int u = 0; u < n_; ++u)
    if (u != v) twice += completions(v, u).count();
  return twice / 2;
}

std::vector<Triple> TripleSystem::triples() const {
  std::vector<Triple> out;
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b) {
      const Bitset& c = completions(a, b);
      for (int x = c.next(b + 1); x >= 0; x = c.next(x + 1)) out.push_back({a, b, x});
    }
  return out;
}

bool TripleSystem::is_independent(const VertexSet& s) const {
  for (int i = 0; i < s.size(); ++i)
    for (int j = i + 1; j < s.size(); ++j)
      for (int k = j + 1; k < s.size(); ++k)
        if (contains(s[i], s[j], s[k])) return false;
  return true;
}

namespace {

class MisSearch {
 public:
  MisSearch(const TripleSystem& h, const MisOptions& opt) : h_(h), opt_(opt), n_(h.order()) {
    // link_[depth][x]: vertices y such that {c,x,y} is an edge for some chosen c
    link_.assign(n_ + 1, std::vector<Bitset>(n_, Bitset(n_)));
    chosen_ = Bitset(n_);
    best_ = Bitset(n_);
    for (const auto& s : opt_.seeds) {
      s.validate(n_);
      if (!h_.is_independent(s)) throw Error(ErrorCode::InvalidParameter, "seed is not independent: " + to_string(s));
      if (opt_.accept && !opt_.accept(s.to_bits(n_))) continue;
      seed_size_ = std::max(seed_size_, s.size());
    }
  }

  MisResult run() {
    Bitset pool = Bitset::full(n_);
    record(0);
    search(0, 0, std::move(pool));
    return {best_size_, VertexSet::from_bits(best_), nodes_};
  }

 private:
  int target() const { return std::max(best_size_ + 1, seed_size_); }

  void record(int size) {
    if (size > best_size_ && (!opt_.accept || opt_.accept(chosen_))) {
      best_size_ = size;
      best_ = chosen_;
    }
  }

  void search(int depth, int size, Bitset pool) {
    ++nodes_;
    while (pool.any()) {
      if (size + bound(depth, pool) < target()) return;
      const int v = pool.first();
      pool.reset(v);

      // include v
      Bitset next = pool;
      for (int c = chosen_.first(); c >= 0; c = chosen_.next(c + 1)) next.subtract(h_.completions(c, v));
      if (opt_.compatibility) next &= opt_.compatibility->neighbors(v);
      const auto& cur = link_[depth];
      auto& nxt = link_[depth + 1];
      for (int x = next.first(); x >= 0; x = next.next(x + 1)) {
        nxt[x] = cur[x];
        nxt[x] |= h_.completions(v, x);
        nxt[x] &= next;
      }
      chosen_.set(v);
      record(size + 1);
      if (next.any()) search(depth + 1, size + 1, std::move(next));
      chosen_.reset(v);
      // exclude v: continue the loop with v removed
      ++nodes_;
    }
  }

  // Greedy partition of the pool into classes that can host at most one
  // (pairwise-linked) or at most two (no unblocked triple) further vertices.
  int bound(int depth, const Bitset& pool) {
    const auto& link = link_[depth];
    Bitset rest = pool;
    int total = 0;
    std::vector<int> cls;
    while (rest.any()) {
      const int a = rest.first();

      // Option A: clique in the link graph, capacity 1.
      Bitset cliqueSet(n_);
      cliqueSet.set(a);
      int clique_size = 1;
      Bitset k = rest & link[a];
      while (k.any()) {
        const int x = k.first();
        cliqueSet.set(x);
        ++clique_size;
        k &= link[x];
      }

      // Option B: no three members can be chosen together, capacity 2.
      // cand holds the vertices that keep every triple of the class blocked.
      cls.assign(1, a);
      Bitset pairset(n_);
      pairset.set(a);
      Bitset cand = rest;
      cand.reset(a);
      bool all_linked = true;
      while (cand.any()) {
        const int x = cand.first();
        cand.reset(x);
        Bitset narrowed = cand;
        bool linked_to_all = true;
        for (int y : cls) {
          if (link[x].test(y)) continue;
          linked_to_all = false;
          Bitset ok = h_.completions(x, y);
          ok |= link[x];
          ok |= link[y];
          narrowed &= ok;
        }
        all_linked = all_linked && linked_to_all;
        cls.push_back(x);
        pairset.set(x);
        cand = narrowed;
      }
      const int b_size = static_cast<int>(cls.size());
      const int b_cap = all_linked ? 1 : std::min(2, b_size);

      if (clique_size - 1 >= b_size - b_cap) {
        total += 1;
        rest.subtract(cliqueSet);
      } else {
        total += b_cap;
        rest.subtract(pairset);
      }
    }
    return total;
  }

  const TripleSystem& h_;
  const MisOptions& opt_;
  int n_;
  std::vector<std::vector<Bitset>> link_;
  Bitset chosen_;
  Bitset best_;
  int best_size_ = 0;
  int seed_size_ = 0;
  std::int64_t nodes_ = 0;
};

}  // namespace

MisResult max_independent_set(const TripleSystem& h, const MisOptions& options) {
  if (options.compatibility && options.compatibility->order() != h.order())
    throw Error(ErrorCode::InvalidParameter, "compatibility graph order mismatch");
  return MisSearch(h, options).run();
}

}  // namespace genpos
